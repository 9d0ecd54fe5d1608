"""Exact scalars and dense exact linear algebra.

Rationals are :class:`fractions.Fraction`.  On top of them this module
provides Gaussian rationals, the formal L-value linear forms used as the
coefficient ring of every q-series, the 2-adic valuation, and a small dense
matrix type with fraction-free elimination.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]

INF = math.inf


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def fmt_rational(x: Fraction) -> str:
    x = as_fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def ord2(x) -> float | int:
    """2-adic valuation of a rational; ``math.inf`` for zero."""
    x = as_fraction(x)
    if x == 0:
        return INF

    def v(n: int) -> int:
        n = abs(n)
        return (n & -n).bit_length() - 1

    return v(x.numerator) - v(x.denominator)


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------


class GaussianRational:
    """Exact ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Number = 0, im: Number = 0):
        object.__setattr__(self, "re", as_fraction(re))
        object.__setattr__(self, "im", as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact")
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        out, base = GaussianRational(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"GR({self.re})"
        return f"GR({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        return f"({self.re} + {self.im}*i)"

    def to_json(self) -> dict:
        return {"re": fmt_rational(self.re), "im": fmt_rational(self.im)}

    @classmethod
    def from_json(cls, d: Mapping[str, str]) -> "GaussianRational":
        return cls(parse_rational(d["re"]), parse_rational(d["im"]))


I = GaussianRational(0, 1)
GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)


# ---------------------------------------------------------------------------
# Formal L-value generators and linear forms
# ---------------------------------------------------------------------------


class LGen(NamedTuple):
    """A formal real constant.

    ``kind`` is ``"1"`` (the unit), ``"Z"`` for ``(2*pi)^-m L(chi0, m)`` with
    ``m`` odd (``m = 1`` is the free constant ``c``), or ``"L"`` for
    ``(2*pi*i)^-m L(chi4, m)`` with ``m`` even.  All three are real numbers.
    """

    kind: str
    m: int

    @property
    def name(self) -> str:
        return "1" if self.kind == "1" else f"{self.kind}{self.m}"

    @classmethod
    def from_name(cls, name: str) -> "LGen":
        if name == "1":
            return ONE
        kind, m = name[0], int(name[1:])
        if kind == "Z":
            return Zodd(m)
        if kind == "L":
            return Leven(m)
        raise ValueError(f"unknown generator name {name!r}")

    def sort_key(self):
        return ({"1": 0, "Z": 1, "L": 2}[self.kind], self.m)


ONE = LGen("1", 0)


def Zodd(m: int) -> LGen:
    if m < 1 or m % 2 == 0:
        raise ValueError("Zodd generators need an odd index >= 1")
    return LGen("Z", m)


def Leven(m: int) -> LGen:
    if m < 2 or m % 2:
        raise ValueError("Leven generators need an even index >= 2")
    return LGen("L", m)


class LFormProductError(ArithmeticError):
    """Raised when two non-unit generators would have to be multiplied."""


class LForm:
    """Finite linear combination of :class:`LGen` with Gaussian rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[LGen, object] | None = None):
        clean = {}
        if terms:
            for g, c in terms.items():
                c = GaussianRational.coerce(c)
                if c:
                    clean[g] = c
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LForm is immutable")

    @classmethod
    def const(cls, c) -> "LForm":
        return cls({ONE: c})

    @classmethod
    def gen(cls, g: LGen, c=1) -> "LForm":
        return cls({g: c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, g: LGen) -> GaussianRational:
        return self._terms.get(g, GR_ZERO)

    def support(self) -> list[LGen]:
        return sorted(self._terms, key=LGen.sort_key)

    def is_scalar(self) -> bool:
        return all(g == ONE for g in self._terms)

    def scalar(self) -> GaussianRational:
        if not self.is_scalar():
            raise ValueError("LForm is not supported on the unit generator")
        return self.coeff(ONE)

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        if not isinstance(other, LForm):
            try:
                other = LForm.const(other)
            except TypeError:
                return NotImplemented
        out = dict(self._terms)
        for g, c in other._terms.items():
            out[g] = out.get(g, GR_ZERO) + c
        return LForm(out)

    __radd__ = __add__

    def __neg__(self):
        return LForm({g: -c for g, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            if not other:
                return LFORM_ZERO
            return LForm({g: c * other for g, c in self._terms.items()})
        if not isinstance(other, LForm):
            return NotImplemented
        if other.is_scalar():
            return self * other.coeff(ONE)
        if self.is_scalar():
            return other * self.coeff(ONE)
        raise LFormProductError(
            f"product of two non-trivial L-forms: ({self}) * ({other})"
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = LForm.const(other)
        if not isinstance(other, LForm):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash(frozenset(self._terms.items()))
            )
        return self._hash

    def imag(self) -> "LForm":
        """Coefficient-wise imaginary part (generators are real)."""
        return LForm({g: GaussianRational(c.im) for g, c in self._terms.items()})

    def real(self) -> "LForm":
        return LForm({g: GaussianRational(c.re) for g, c in self._terms.items()})

    def evaluate(self, values: Mapping[LGen, complex]) -> complex:
        total = 0j
        for g, c in self._terms.items():
            total += complex(c) * (1.0 if g == ONE else values[g])
        return total

    def to_json(self) -> dict:
        return {g.name: self._terms[g].to_json() for g in self.support()}

    @classmethod
    def from_json(cls, d: Mapping[str, Mapping[str, str]]) -> "LForm":
        return cls({LGen.from_name(k): GaussianRational.from_json(v) for k, v in d.items()})

    def __repr__(self):
        return f"LForm({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for g in self.support():
            c = self._terms[g]
            parts.append(str(c) if g == ONE else f"{c}*{g.name}")
        return " + ".join(parts)


LFORM_ZERO = LForm()


def lform_imag(f: LForm) -> LForm:
    return f.imag()


# ---------------------------------------------------------------------------
# Dense rational matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major tuple of row tuples of Fraction

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]], cols: int | None = None) -> "RationalMatrix":
        data = tuple(tuple(as_fraction(x) for x in r) for r in rows)
        ncols = cols if cols is not None else (len(data[0]) if data else 0)
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix rows")
        return cls(len(data), ncols, data)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "RationalMatrix":
        return cls.from_rows([[0] * c for _ in range(r)], cols=c)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def T(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols, self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        oc = other.T().entries
        return RationalMatrix(
            self.rows, other.cols,
            tuple(tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in oc)
                  for r in self.entries),
        )

    def apply(self, v: Sequence[Number]) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return [sum((a * as_fraction(x) for a, x in zip(r, v)), Fraction(0)) for r in self.entries]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def to_json(self) -> list[list[str]]:
        return [[fmt_rational(x) for x in r] for r in self.entries]


def _integer_rows(M: RationalMatrix) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers; return rows and the product of the scales."""
    out, scale = [], Fraction(1)
    for r in M.entries:
        den = 1
        for x in r:
            den = den * x.denominator // math.gcd(den, x.denominator)
        out.append([int(x * den) for x in r])
        scale *= den
    return out, scale


def _bareiss(a: list[list[int]]) -> tuple[int, int]:
    """Fraction-free elimination in place; returns (rank, signed last pivot)."""
    nr = len(a)
    nc = len(a[0]) if nr else 0
    prev, sign, r = 1, 1, 0
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
            sign = -sign
        piv = a[r][c]
        for i in range(r + 1, nr):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, nc):
                ai[j] = (piv * ai[j] - f * a[r][j]) // prev
            ai[c] = 0
        # rows above keep their values; only the trailing block is updated
        prev = piv
        r += 1
    return r, sign * prev


def mat_rank(M: RationalMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    a, _ = _integer_rows(M)
    rank, _ = _bareiss(a)
    return rank


def mat_det(M: RationalMatrix) -> Fraction:
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    if M.rows == 0:
        return Fraction(1)
    a, scale = _integer_rows(M)
    rank, d = _bareiss(a)
    if rank < M.rows:
        return Fraction(0)
    return Fraction(d) / scale


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    a = [list(r) for r in rows]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    pivots, r = [], 0
    for c in range(nc):
        p = next((i for i in range(r, nr) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return a, pivots


def mat_solve(M: RationalMatrix, b: Sequence[Number]) -> list[Fraction] | None:
    """A particular solution of ``M x = b`` with free variables set to 0, or None."""
    if len(b) != M.rows:
        raise ValueError("right-hand side length does not match matrix rows")
    aug = [list(r) + [as_fraction(x)] for r, x in zip(M.entries, b)]
    if not aug:
        return [Fraction(0)] * M.cols
    red, pivots = _rref(aug)
    if M.cols in pivots:
        return None
    x = [Fraction(0)] * M.cols
    for i, c in enumerate(pivots):
        x[c] = red[i][-1]
    return x


def mat_kernel(M: RationalMatrix) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column."""
    if M.rows == 0:
        return [[Fraction(int(i == j)) for i in range(M.cols)] for j in range(M.cols)]
    red, pivots = _rref([list(r) for r in M.entries])
    free = [c for c in range(M.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(v)
    return basis


def mat_inverse(M: RationalMatrix) -> RationalMatrix:
    if M.rows != M.cols:
        raise ValueError("inverse of a non-square matrix")
    n = M.rows
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M.entries)]
    red, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return RationalMatrix.from_rows([r[n:] for r in red])


def vectors_rank(vectors: Iterable[Sequence[Number]]) -> int:
    vs = [list(v) for v in vectors]
    if not vs:
        return 0
    return mat_rank(RationalMatrix.from_rows(vs))
