"""Truncated q-series with a separately tracked constant term.

Coefficients of ``q^1 .. q^N`` live in a tuple; they are either
:class:`~eis4.exact_math.GaussianRational` or :class:`~eis4.exact_math.LForm`
values.  The constant term is a :class:`Constant` descriptor because the
constant terms of the double series are double L-values with no exact
representation here.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .exact_math import GaussianRational, LForm, LFormProductError, LFORM_ZERO, GR_ZERO

DEFAULT_TERMS = 40


def default_terms() -> int:
    env = os.environ.get("EIS4_TERMS")
    return int(env) if env else DEFAULT_TERMS


class ConstantError(ValueError):
    """Incompatible or unusable constant terms."""


@dataclass(frozen=True)
class Constant:
    """Constant-term descriptor.

    ``kind`` is ``"exact"`` (``value`` holds the coefficient), ``"opaque"``
    (``labels`` is a sorted tuple of ``(label, coefficient)`` pairs, a formal
    combination of named values such as ``("T", 2, 3)``), or ``"absent"``.
    """

    kind: str
    value: object = None
    labels: tuple = field(default=())

    def __post_init__(self):
        if self.kind not in ("exact", "opaque", "absent"):
            raise ValueError(f"bad constant kind {self.kind!r}")

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    @property
    def is_opaque(self) -> bool:
        return self.kind == "opaque"

    def scale(self, s) -> "Constant":
        if self.kind == "exact":
            return Exact(self.value * s)
        if self.kind == "opaque":
            return _opaque({lab: c * s for lab, c in self.labels})
        return self

    def to_json(self):
        if self.kind == "exact":
            v = self.value
            return {"kind": "exact", "value": v.to_json()}
        if self.kind == "opaque":
            return {
                "kind": "opaque",
                "terms": [
                    {"label": _label_name(lab), "coefficient": GaussianRational.coerce(c).to_json()}
                    for lab, c in self.labels
                ],
            }
        return {"kind": "absent"}


def _label_name(lab: tuple) -> str:
    head, *args = lab
    if head == "prod":
        return "*".join(_label_name(a) for a in args)
    return f"{head}({','.join(str(a) for a in args)})"


def Exact(value) -> Constant:
    return Constant("exact", value)


def OpaqueT(k: int) -> Constant:
    return Constant("opaque", labels=((("T", k), GaussianRational(1)),))


def OpaqueT2(k1: int, k2: int) -> Constant:
    return Constant("opaque", labels=((("T", k1, k2), GaussianRational(1)),))


ABSENT = Constant("absent")


def _opaque(d: dict) -> Constant:
    items = tuple(sorted(((lab, GaussianRational.coerce(c)) for lab, c in d.items() if c),
                         key=lambda t: repr(t[0])))
    return Constant("opaque", labels=items) if items else ABSENT


def _add_constants(a: Constant, b: Constant) -> Constant:
    if a.kind == "absent":
        return b
    if b.kind == "absent":
        return a
    if a.kind == "exact" and b.kind == "exact":
        return Exact(a.value + b.value)
    if a.kind == "opaque" and b.kind == "opaque":
        d = dict(a.labels)
        for lab, c in b.labels:
            d[lab] = d.get(lab, GR_ZERO) + c
        return _opaque(d)
    raise ConstantError("cannot add an exact constant to an opaque one")


@dataclass(frozen=True)
class QSeries:
    coeffs: tuple  # coefficient of q^n at index n-1
    constant: Constant = ABSENT

    @property
    def N(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int):
        if n == 0:
            raise KeyError("the constant term is held by .constant")
        return self.coeffs[n - 1]

    @classmethod
    def from_function(cls, N: int, f: Callable[[int], object], constant: Constant = ABSENT) -> "QSeries":
        return cls(tuple(f(n) for n in range(1, N + 1)), constant)

    def scale(self, s) -> "QSeries":
        return QSeries(tuple(c * s for c in self.coeffs), self.constant.scale(s))

    def __add__(self, other: "QSeries") -> "QSeries":
        return series_add(self, other)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return series_add(self, other.scale(-1))

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __neg__(self):
        return self.scale(-1)

    def truncate(self, N: int) -> "QSeries":
        if N > self.N:
            raise ValueError("cannot extend a truncated series")
        return QSeries(self.coeffs[:N], self.constant)

    def without_constant(self) -> "QSeries":
        return QSeries(self.coeffs, ABSENT)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self) -> dict:
        return {
            "truncation": self.N,
            "constant": self.constant.to_json(),
            "coefficients": [
                {"n": n, "coefficient": _coeff_json(c)} for n, c in enumerate(self.coeffs, start=1)
            ],
        }


def _coeff_json(c):
    if isinstance(c, LForm):
        return c.to_json()
    return LForm.const(c).to_json()


def zero_series(N: int, zero=LFORM_ZERO) -> QSeries:
    return QSeries((zero,) * N, ABSENT)


def series_add(a: QSeries, b: QSeries) -> QSeries:
    if a.N != b.N:
        raise ValueError(f"truncation mismatch: {a.N} vs {b.N}")
    return QSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)),
                   _add_constants(a.constant, b.constant))


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product truncated at the common order.

    Constants must be exact or absent.  When the two constants are both
    non-trivial L-forms their product has no representation; the result then
    carries an opaque product label instead.
    """
    if a.N != b.N:
        raise ValueError(f"truncation mismatch: {a.N} vs {b.N}")
    for s in (a, b):
        if s.constant.is_opaque:
            raise ConstantError("cannot multiply a series with an opaque constant")
    N = a.N
    a0 = a.constant.value if a.constant.is_exact else None
    b0 = b.constant.value if b.constant.is_exact else None
    out = []
    for n in range(1, N + 1):
        acc = None
        if a0 is not None:
            acc = a0 * b.coeffs[n - 1]
        if b0 is not None:
            t = a.coeffs[n - 1] * b0
            acc = t if acc is None else acc + t
        for i in range(1, n):
            t = a.coeffs[i - 1] * b.coeffs[n - i - 1]
            acc = t if acc is None else acc + t
        if acc is None:
            acc = a.coeffs[0] * 0
        out.append(acc)
    if a0 is None or b0 is None:
        const = ABSENT
    else:
        try:
            const = Exact(a0 * b0)
        except LFormProductError:
            const = Constant("opaque", labels=((("prod", ("c", str(a0)), ("c", str(b0))), GaussianRational(1)),))
    return QSeries(tuple(out), const)


def series_imag(a: QSeries) -> QSeries:
    """Coefficient-wise imaginary part of the non-constant coefficients."""
    def im(c):
        if isinstance(c, LForm):
            return c.imag()
        c = GaussianRational.coerce(c)
        return GaussianRational(c.im)
    return QSeries(tuple(im(c) for c in a.coeffs), ABSENT)


def linear_combination(terms: Sequence[tuple[object, QSeries]]) -> QSeries:
    if not terms:
        raise ValueError("empty linear combination")
    acc = None
    for c, s in terms:
        if not c:
            continue
        t = s.scale(c)
        acc = t if acc is None else series_add(acc, t)
    if acc is None:
        N = terms[0][1].N
        return zero_series(N)
    return acc


def evaluate(a: QSeries, q: complex, values=None, constant: complex | None = None) -> complex:
    """Numerical value at ``q``; L-form coefficients need ``values`` for their generators."""
    total = 0j
    qn = 1 + 0j
    for c in a.coeffs:
        qn *= q
        if isinstance(c, LForm):
            total += c.evaluate(values if values is not None else {}) * qn
        else:
            total += complex(GaussianRational.coerce(c)) * qn
    if constant is not None:
        total += constant
    elif a.constant.is_exact:
        v = a.constant.value
        total += v.evaluate(values if values is not None else {}) if isinstance(v, LForm) else complex(GaussianRational.coerce(v))
    elif a.constant.is_opaque:
        raise ConstantError("numeric value of an opaque constant must be supplied")
    return total


def power_series_from_dict(N: int, d: dict, zero=GR_ZERO) -> QSeries:
    return QSeries(tuple(d.get(n, zero) for n in range(1, N + 1)), ABSENT)


def first_mismatch(a: QSeries, b: QSeries):
    """Return ``(n, a_n, b_n)`` for the first differing coefficient, else None."""
    if a.N != b.N:
        raise ValueError("truncation mismatch")
    for n, (x, y) in enumerate(zip(a.coeffs, b.coeffs), start=1):
        if _as_lform(x) != _as_lform(y):
            return n, _as_lform(x), _as_lform(y)
    return None


def _as_lform(c) -> LForm:
    return c if isinstance(c, LForm) else LForm.const(c)


__all__ = [
    "QSeries", "Constant", "Exact", "OpaqueT", "OpaqueT2", "ABSENT", "ConstantError",
    "series_add", "series_mul", "series_imag", "linear_combination", "evaluate",
    "zero_series", "first_mismatch", "default_terms", "DEFAULT_TERMS",
]
