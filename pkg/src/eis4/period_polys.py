"""Homogeneous polynomials in (X, Y) with the GL2 action, the matrices built
from it, and the closed-form period matrix with its 2-adic determinant check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Mapping

from .exact_math import RationalMatrix, mat_rank, mat_kernel, mat_det, ord2
from .special_numbers import bernoulli

__all__ = [
    "HomogPoly", "GL2Mat", "GroupRingElem", "act", "act_ring", "rep_matrix",
    "IDENTITY", "DELTA", "EPS", "U", "T", "J", "A",
    "delta_k", "delta_tilde", "build_Mk", "im_delta_dim", "delta_tilde_kernel_dim",
    "im_space_rank_bruteforce", "c_coeff", "a_coeff", "r_period", "r_period_direct",
    "r_period_via_symmetries",
    "build_Atilde", "det_ord2_formula", "check_det_ord2", "DetReport",
    "expected_rank_Mk",
]


@dataclass(frozen=True)
class HomogPoly:
    """``sum_n coeffs[n] X^n Y^(w-n)`` with ``w = degree``."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def zero(cls, w: int) -> "HomogPoly":
        return cls((0,) * (w + 1))

    @classmethod
    def monomial(cls, w: int, n: int, c=1) -> "HomogPoly":
        v = [0] * (w + 1)
        v[n] = c
        return cls(v)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return HomogPoly(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "HomogPoly") -> "HomogPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "HomogPoly":
        return HomogPoly(tuple(a * c for a in self.coeffs))

    def even_part(self) -> "HomogPoly":
        return HomogPoly(tuple(c if n % 2 == 0 else 0 for n, c in enumerate(self.coeffs)))

    def odd_part(self) -> "HomogPoly":
        return HomogPoly(tuple(c if n % 2 else 0 for n, c in enumerate(self.coeffs)))

    def __call__(self, x, y):
        w = self.degree
        return sum((c * Fraction(x) ** n * Fraction(y) ** (w - n) for n, c in enumerate(self.coeffs)),
                   Fraction(0))

    def __str__(self):
        w = self.degree
        parts = [f"{c}*X^{n}*Y^{w - n}" for n, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GL2Mat:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for f in ("a", "b", "c", "d"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))

    def __matmul__(self, o: "GL2Mat") -> "GL2Mat":
        return GL2Mat(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                      self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c


IDENTITY = GL2Mat(1, 0, 0, 1)
DELTA = GL2Mat(-1, 0, 0, 1)
EPS = GL2Mat(0, 1, 1, 0)
U = GL2Mat(1, -1, 1, 0)
T = GL2Mat(1, 1, 0, 1)
J = GL2Mat(-1, 0, 0, -1)
A = GL2Mat(1, 0, 0, 4)


def _linear_power(p: Fraction, r: Fraction, e: int) -> list[Fraction]:
    """Coefficients (by X-degree) of ``(p X + r Y)^e``."""
    return [comb(e, i) * p ** i * r ** (e - i) for i in range(e + 1)]


def act(P: HomogPoly, g: GL2Mat) -> HomogPoly:
    """``P(aX + bY, cX + dY)``."""
    w = P.degree
    out = [Fraction(0)] * (w + 1)
    for n, coef in enumerate(P.coeffs):
        if not coef:
            continue
        left = _linear_power(g.a, g.b, n)
        right = _linear_power(g.c, g.d, w - n)
        for i, x in enumerate(left):
            if not x:
                continue
            for j, y in enumerate(right):
                if y:
                    out[i + j] += coef * x * y
    return HomogPoly(out)


class GroupRingElem:
    """Finite rational combination of 2x2 matrices, acting on the right."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[GL2Mat, object] | None = None):
        clean = {}
        for g, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[g] = clean.get(g, Fraction(0)) + c
        self.terms = {g: c for g, c in clean.items() if c}

    @classmethod
    def of(cls, g: GL2Mat, c=1) -> "GroupRingElem":
        return cls({g: c})

    def __add__(self, other):
        other = _ring(other)
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, Fraction(0)) + c
        return GroupRingElem(out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElem({g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_ring(other))

    def __rsub__(self, other):
        return _ring(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GroupRingElem({g: c * other for g, c in self.terms.items()})
        other = _ring(other)
        out: dict = {}
        for g, c in self.terms.items():
            for h, d in other.terms.items():
                gh = g @ h
                out[gh] = out.get(gh, Fraction(0)) + c * d
        return GroupRingElem(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return _ring(other) * self

    def __eq__(self, other):
        return isinstance(other, GroupRingElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"GroupRingElem({self.terms})"


def _ring(x) -> GroupRingElem:
    if isinstance(x, GroupRingElem):
        return x
    if isinstance(x, GL2Mat):
        return GroupRingElem.of(x)
    if isinstance(x, (int, Fraction)):
        return GroupRingElem.of(IDENTITY, x)
    raise TypeError(f"cannot convert {type(x).__name__} to a group ring element")


def act_ring(P: HomogPoly, e) -> HomogPoly:
    """Linear extension of :func:`act`.

    Products in the group ring are composed so that ``P|(g h) = (P|g)|h``;
    since ``act`` substitutes ``(X, Y) -> (X, Y) g^T``, the matrix product
    ``g @ h`` realises exactly this right action.
    """
    e = _ring(e)
    out = HomogPoly.zero(P.degree)
    for g, c in e.terms.items():
        out = out + act(P, g).scale(c)
    return out


def rep_matrix(e, k: int) -> RationalMatrix:
    """Matrix of ``P -> P|e`` on ``V_k``: entry ``[i][n]`` is the ``X^i`` coefficient of ``(X^n Y^(w-n))|e``."""
    w = k - 2
    cols = [act_ring(HomogPoly.monomial(w, n), e).coeffs for n in range(w + 1)]
    return RationalMatrix.from_rows([[cols[n][i] for n in range(w + 1)] for i in range(w + 1)])


def delta_k(k: int) -> GroupRingElem:
    half_plus = (GroupRingElem.of(IDENTITY) + DELTA) * Fraction(1, 2)
    half_minus = (GroupRingElem.of(IDENTITY) - DELTA) * Fraction(1, 2)
    sign = (-1) ** k
    inner = half_plus - half_minus * U * sign - half_plus * U * EPS
    return GroupRingElem.of(EPS) * inner


def delta_tilde() -> GroupRingElem:
    one = GroupRingElem.of(IDENTITY)
    return (one + DELTA) + (one - DELTA) * A * (one + EPS)


def build_Mk(k: int) -> RationalMatrix:
    """The ``(k-2) x (k-1)`` matrix with rows ``j`` and columns ``r``."""
    if k < 3:
        raise ValueError("build_Mk needs k >= 3")
    even = k % 2 == 0
    rows = []
    for j in range(1, k - 1):
        j_first = (j % 2 == 1) if even else (j % 2 == 0)
        row = []
        for r in range(1, k):
            v = 0
            if j_first and j != k - r:
                v += (-1) ** r * comb(k - j - 1, r - 1)
            if not j_first:
                v += (-1) ** r * comb(k - j - 1, k - r - 1)
            row.append(v)
        rows.append(row)
    return RationalMatrix.from_rows(rows)


def expected_rank_Mk(k: int) -> int:
    return (3 * k) // 4 - 1 if k % 2 == 0 else k - 2


def im_delta_dim(k: int) -> int:
    if k < 3:
        raise ValueError("k must be >= 3")
    return mat_rank(rep_matrix(delta_k(k), k))


def delta_tilde_kernel_dim(k: int) -> int:
    if k < 6 or k % 2:
        raise ValueError("k must be even and >= 6")
    return len(mat_kernel(rep_matrix(delta_tilde(), k)))


def im_space_rank_bruteforce(k: int, N: int = 40) -> int:
    """Rank of the imaginary parts of ``H~_{r,k-r}``, ``r = 1..k-1``.

    Coordinates are (q-power, generator) pairs; the generators are treated as
    independent formal symbols.
    """
    from .eisenstein import eis_H2
    from .qseries import series_imag

    if k < 3:
        raise ValueError("k must be >= 3")
    rows = []
    keys: dict = {}
    for r in range(1, k):
        im = series_imag(eis_H2(r, k - r, N))
        row = {}
        for n, c in enumerate(im.coeffs, start=1):
            for g, v in c.terms.items():
                key = (n, g)
                keys.setdefault(key, len(keys))
                row[keys[key]] = v.re
        rows.append(row)
    if not keys:
        return 0
    dense = [[row.get(i, 0) for i in range(len(keys))] for row in rows]
    return mat_rank(RationalMatrix.from_rows(dense))


# ---------------------------------------------------------------------------
# Closed-form periods
# ---------------------------------------------------------------------------


def _check_index(w: int, m: int, n: int):
    if not (0 < m < w and 0 < n < w):
        raise ValueError(f"indices out of range: m={m}, n={n}, w={w}")


@lru_cache(maxsize=None)
def c_coeff(w: int, m: int, n: int) -> Fraction:
    _check_index(w, m, n)
    e = n + 1 - m
    if e < 0:
        raise ValueError(f"n + 1 - m must be >= 0 (got {e})")
    mt = w - m
    return (Fraction(4) ** (n - m) * factorial(n) * factorial(mt)
            * (1 - Fraction(1, 2 ** e)) * bernoulli(e) / factorial(e))


@lru_cache(maxsize=None)
def a_coeff(w: int, m: int, n: int) -> Fraction:
    _check_index(w, m, n)
    return c_coeff(w, m, n) + (-1) ** n * c_coeff(w, m, w - n)


def r_period(w: int, n: int, m: int) -> Fraction:
    """Normalized period ``r_m(R_{w,n})`` from the closed form.

    Valid for ``w - m > n > 0``, ``m + n`` odd and ``0 < m < w``.
    """
    mt = w - m
    if not (mt > n > 0 and 0 < m < w):
        raise ValueError(f"(w,n,m)=({w},{n},{m}) outside w-m > n > 0, 0 < m < w")
    if (m + n) % 2 == 0:
        raise ValueError("m + n must be odd")
    a = a_coeff(w, m, n) if m < n else a_coeff(w, n, m)
    return (-1) ** (m + n) * Fraction(4) ** (mt - n) / factorial(w) * a


def r_period_direct(w: int, n: int, m: int) -> Fraction:
    """``r_m(R_{w,n})`` for ``w > m > n``, ``m > w - n``, ``m + n`` odd, directly from the period formula."""
    nt = w - n
    if not (w > m > n and m > nt):
        raise ValueError("needs w > m > n and m > w - n")
    if (m + n) % 2 == 0:
        raise ValueError("m + n must be odd")
    e1 = m + 1 - nt
    e2 = m + 1 - n
    t1 = (-1) ** n * factorial(n) * factorial(m) * (1 - Fraction(1, 2 ** e1)) * bernoulli(e1) / factorial(e1)
    t2 = Fraction(4) ** (nt - n) * factorial(nt) * factorial(m) * (1 - Fraction(1, 2 ** e2)) \
        * bernoulli(e2) / factorial(e2)
    return (t1 + t2) / factorial(w)


def r_period_via_symmetries(w: int, n: int, m: int) -> Fraction:
    """Reach the closed-form domain through the Atkin-Lehner and swap symmetries.

    Uses ``r_m(R_n) = (-1)^(n+m) 4^(n~ + m~ - n - m) r_{m~}(R_{n~})`` and
    ``r_m(R_n) = r_n(R_m)`` to move ``(n, m)`` into the range of
    :func:`r_period_direct`; returns ``None`` when no image lands there.
    """
    candidates = []
    nt, mt = w - n, w - m
    candidates.append((n, m, Fraction(1)))
    candidates.append((nt, mt, (-1) ** (n + m) * Fraction(4) ** (nt + mt - n - m)))
    out = []
    for a, b, f in candidates:
        for nn, mm in ((a, b), (b, a)):
            try:
                out.append(f * r_period_direct(w, nn, mm))
            except ValueError:
                pass
    return out[0] if out else None


def build_Atilde(w: int) -> RationalMatrix:
    if w < 6 or w % 2:
        raise ValueError("w must be even and >= 6")
    d = w // 4
    rows = []
    for i in range(1, d + 1):
        rows.append([a_coeff(w, 2 * j, 2 * i - 1) if i > j else a_coeff(w, 2 * i - 1, 2 * j)
                     for j in range(1, d + 1)])
    return RationalMatrix.from_rows(rows)


def det_ord2_formula(w: int) -> int:
    d = w // 4
    total = sum(ord2(factorial(2 * i) * factorial(w - 2 * i)) for i in range(1, d + 1))
    return total - 2 * d + (1 if w % 4 == 0 else 0)


@dataclass(frozen=True)
class DetReport:
    w: int
    det: Fraction
    ord2_det: object
    ord2_formula: int
    status: str

    def to_json(self) -> dict:
        from .exact_math import fmt_rational
        return {"w": self.w, "det": fmt_rational(self.det),
                "ord2": None if self.det == 0 else self.ord2_det,
                "ord2_formula": self.ord2_formula, "status": self.status}


def check_det_ord2(w: int) -> DetReport:
    det = mat_det(build_Atilde(w))
    v = ord2(det)
    f = det_ord2_formula(w)
    ok = det != 0 and v == f
    return DetReport(w, det, v, f, "pass" if ok else "fail")
