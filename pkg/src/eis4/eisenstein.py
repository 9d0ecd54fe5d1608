"""Normalized q-expansions of the level-4 Eisenstein series.

Every series here has its ``(2 pi i)`` powers absorbed, so coefficients are
Gaussian rationals or :class:`~eis4.exact_math.LForm` combinations of the
formal L-value generators.  ``hN``, ``htN``, ``gtN`` and ``psitN`` are the
building blocks ``(2 pi i)^-m h_m``, ``(2 pi i)^-m h~_m``, ``(2 pi i)^-m g~_m``
and ``(2 pi i)^-m psi~_m`` (non-constant parts only).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exact_math import (
    GaussianRational, LForm, ONE, Zodd, Leven, GR_ZERO,
)
from .qseries import QSeries, Exact, OpaqueT2, ABSENT, first_mismatch
from .special_numbers import (
    bernoulli, chi4, ell0_even, ell4_odd, sigma_chi0, sigma_chi4, sigma_chi4_shift,
)

__all__ = [
    "BlockSpec", "block", "hN", "htN", "gtN", "psitN",
    "l0_normalized", "l4_normalized",
    "eis_H", "eis_G", "eis_H2", "omega_double_sum", "diagonal_product_direct",
    "diagonal_product_closed", "verify_diagonal_product",
]


@dataclass(frozen=True)
class BlockSpec:
    """One of the divisor-sum blocks ``h``, ``h_tilde``, ``g_tilde`` at weight ``m``."""

    kind: str
    m: int

    def __post_init__(self):
        if self.kind not in ("h", "h_tilde", "g_tilde"):
            raise ValueError(f"unknown block kind {self.kind!r}")
        if self.m < 1:
            raise ValueError("block weight must be >= 1")

    def reduced(self, n: int) -> int:
        if self.kind == "h":
            return sigma_chi0(self.m - 1, n)
        if self.kind == "h_tilde":
            return sigma_chi4(self.m - 1, n)
        return sigma_chi4_shift(self.m - 1, n)

    def prefactor(self) -> GaussianRational:
        m = self.m
        base = Fraction((-1) ** m, 2 ** (m - 1) * factorial(m - 1))
        return GaussianRational(0, base) if self.kind == "h_tilde" else GaussianRational(base)


@lru_cache(maxsize=None)
def block(kind: str, m: int, N: int) -> tuple:
    """Normalized non-constant coefficients (q^1..q^N) of a block."""
    spec = BlockSpec(kind, m)
    pre = spec.prefactor()
    return tuple(pre * spec.reduced(n) for n in range(1, N + 1))


def hN(m: int, N: int) -> tuple:
    return block("h", m, N)


def htN(m: int, N: int) -> tuple:
    return block("h_tilde", m, N)


def gtN(m: int, N: int) -> tuple:
    return block("g_tilde", m, N)


@lru_cache(maxsize=None)
def psitN(k: int, N: int) -> tuple:
    """``(2 pi i)^-k psi~_k`` as coefficients of q^1..q^N."""
    pre = GaussianRational(0, Fraction((-1) ** k, 2 ** (k - 1) * factorial(k - 1)))
    return tuple(pre * (chi4(n) * n ** (k - 1)) for n in range(1, N + 1))


def l0_normalized(a: int) -> LForm:
    """``(2 pi i)^-a L(chi0, a)``: rational for even ``a``, a Zodd generator otherwise.

    The Zodd generators stand for the real numbers ``(2 pi)^-a L(chi0, a)``, so
    the odd case carries the factor ``(-i)^a``.
    """
    if a % 2 == 0:
        return LForm.const(ell0_even(a))
    return LForm.gen(Zodd(a), GaussianRational(0, -1) ** a)


def l4_normalized(a: int) -> LForm:
    """``(2 pi i)^-a L(chi4, a)``: imaginary rational for odd ``a``, Leven otherwise."""
    if a % 2:
        return LForm.const(ell4_odd(a))
    return LForm.gen(Leven(a))


class _Acc:
    """Accumulates ``sum_t lform_t * block_t`` coefficient-wise into LForms."""

    def __init__(self, N: int):
        self.N = N
        self.rows = [dict() for _ in range(N)]

    def add(self, coef, values):
        terms = coef.terms if isinstance(coef, LForm) else {ONE: GaussianRational.coerce(coef)}
        for g, c in terms.items():
            if not c:
                continue
            for row, v in zip(self.rows, values):
                if v:
                    row[g] = row.get(g, GR_ZERO) + c * v

    def series(self, constant=ABSENT) -> QSeries:
        return QSeries(tuple(LForm(r) for r in self.rows), constant)


@lru_cache(maxsize=None)
def eis_H(k: int, N: int) -> QSeries:
    """Normalized single series ``H~_k``."""
    if k < 1:
        raise ValueError("weight must be >= 1")
    const = LForm.const(ell4_odd(k) * 2) if k % 2 else LForm.gen(Leven(k), 2)
    pre = GaussianRational(0, Fraction((-1) ** k, 4 ** (k - 1) * factorial(k - 1)))
    coeffs = tuple(LForm.const(pre * sigma_chi4(k - 1, n)) for n in range(1, N + 1))
    return QSeries(coeffs, Exact(const))


@lru_cache(maxsize=None)
def eis_G(k: int, N: int) -> QSeries:
    """Normalized ``G~_k`` for even ``k >= 4``."""
    if k < 4 or k % 2:
        raise ValueError("eis_G needs an even weight >= 4")
    pre = Fraction(1, 2 ** (2 * k - 1) * factorial(k - 1))
    coeffs = tuple(LForm.const(pre * sigma_chi4_shift(k - 1, n)) for n in range(1, N + 1))
    return QSeries(coeffs, Exact(LForm.const(ell0_even(k))))


def _phi_tilde_weight(k1: int, n1: int) -> Fraction:
    if n1 == 0:
        return Fraction(1, 2) if k1 == 1 else Fraction(0)
    return Fraction(chi4(n1 + 1) * n1 ** (k1 - 1))


@lru_cache(maxsize=None)
def omega_double_sum(k1: int, k2: int, N: int) -> QSeries:
    """Reduced coefficients of ``sum_{0<m1<m2} phi~_{k1}(m1 tau) psi_{k2}(m2 tau)``.

    The factorials, signs and powers of two of the two blocks are stripped: the
    coefficient of q^n sums ``w(n1) chi0(n2) n2^(k2-1)`` over ``m1 < m2`` and
    ``n1 m1 + n2 m2 = n``, where ``w(n1) = chi4(n1+1) n1^(k1-1)`` and, when
    ``k1 = 1``, ``w(0) = 1/2``.
    """
    if k1 < 1 or k2 < 1:
        raise ValueError("weights must be >= 1")
    out = [Fraction(0)] * (N + 1)
    n1_min = 0 if k1 == 1 else 1
    for m2 in range(2, N + 1):
        for n2 in range(1, N // m2 + 1, 2):
            base = m2 * n2
            b = n2 ** (k2 - 1)
            for m1 in range(1, m2):
                for n1 in range(n1_min, (N - base) // m1 + 1):
                    w = _phi_tilde_weight(k1, n1)
                    if w:
                        out[base + n1 * m1] += w * b
    return QSeries(tuple(GaussianRational(c) for c in out[1:]), ABSENT)


@lru_cache(maxsize=None)
def eis_H2(k1: int, k2: int, N: int) -> QSeries:
    """Normalized double series ``H~_{k1,k2}``; constant term is the opaque ``T~(k1,k2)``."""
    if k1 < 1 or k2 < 1:
        raise ValueError("weights must be >= 1")
    K = k1 + k2
    acc = _Acc(N)
    four = Fraction(4)
    acc.add(l0_normalized(k1) * (-four / 2 ** k2), hN(k2, N))
    omega_pre = Fraction((-1) ** K * 2 ** 2, 2 ** K * factorial(k1 - 1) * factorial(k2 - 1))
    acc.add(GaussianRational(-four * omega_pre / 2 ** K), omega_double_sum(k1, k2, N).coeffs)
    for j in range(k2):
        c = four * (-1) ** (k1 - 1) * comb(k1 + j - 1, k1 - 1) / 2 ** (k2 - j)
        acc.add(l0_normalized(k1 + j) * c, hN(k2 - j, N))
    for j in range(k1):
        c = four * (-1) ** j * comb(k2 + j - 1, k2 - 1) / 2 ** (k1 - j)
        acc.add(l4_normalized(k2 + j) * c, htN(k1 - j, N))
    return acc.series(OpaqueT2(k1, k2))


# ---------------------------------------------------------------------------
# Diagonal product check
# ---------------------------------------------------------------------------


def diagonal_product_direct(k1: int, k2: int, N: int) -> tuple:
    """``sum_m psi~_{k1}(m tau) psi~_{k2}(m tau)`` by convolution, q^1..q^N."""
    a, b = psitN(k1, N), psitN(k2, N)
    prod = [GR_ZERO] * (N + 1)
    for n in range(2, N + 1):
        s = GR_ZERO
        for i in range(1, n):
            if a[i - 1] and b[n - i - 1]:
                s = s + a[i - 1] * b[n - i - 1]
        prod[n] = s
    out = [GR_ZERO] * (N + 1)
    for m in range(1, N + 1):
        for n in range(1, N // m + 1):
            if prod[n]:
                out[m * n] = out[m * n] + prod[n]
    return tuple(out[1:])


def diagonal_product_closed(k1: int, k2: int, N: int) -> tuple:
    """The Bernoulli-weighted ``g~`` combination for the diagonal product."""
    out = list(gtN(k1 + k2, N))

    def sub(c: Fraction, blk):
        for i, v in enumerate(blk):
            if v:
                out[i] = out[i] - v * c

    for j in range(k1):
        a = k2 + j
        c = Fraction((-1) ** k2 * (-1) ** a, factorial(j) * factorial(k2 - 1)) * bernoulli(a) / a \
            * (Fraction(1, 2 ** (a - 1)) - 1)
        if c:
            sub(c, gtN(k1 - j, N))
    for j in range(k2):
        a = k1 + j
        c = Fraction((-1) ** j * (-1) ** a, factorial(j) * factorial(k1 - 1)) * bernoulli(a) / a \
            * (Fraction(1, 2 ** (a - 1)) - 1)
        if c:
            sub(c, gtN(k2 - j, N))
    return tuple(out)


def verify_diagonal_product(k1: int, k2: int, N: int):
    from .verifier import VerifyReport

    if k1 < 1 or k2 < 1:
        raise ValueError("weights must be >= 1")
    lhs = QSeries(tuple(LForm.const(c) for c in diagonal_product_direct(k1, k2, N)))
    rhs = QSeries(tuple(LForm.const(c) for c in diagonal_product_closed(k1, k2, N)))
    return VerifyReport.from_mismatch("diagonal-product", {"k1": k1, "k2": k2, "N": N},
                                      first_mismatch(lhs, rhs), N)
