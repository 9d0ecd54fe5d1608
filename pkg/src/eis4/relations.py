"""Linear relations among double T-values coming from modular forms, and the
period-polynomial vectors they are compared against.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exact_math import GaussianRational, RationalMatrix, mat_solve, vectors_rank
from .period_polys import HomogPoly, T, act
from .special_numbers import Poly, b0_poly, bernoulli, ell0_even, ell4_odd, euler_number

__all__ = [
    "lambda_kr", "lambda_kr_from_lvalues", "atilde_vector", "atilde_from_constant_terms",
    "stilde_poly", "p_poly", "conj_vector", "express_in_modular", "ExpressResult",
    "conj_span_dims", "ERRATA", "Erratum", "num_modular_relations",
]


def _check_lambda_args(k: int, r: int):
    if k < 4 or k % 2:
        raise ValueError("k must be even and >= 4")
    if r % 2 == 0 or not 3 <= r <= k - 3:
        raise ValueError("r must be odd with 3 <= r <= k-3")


def lambda_kr(k: int, r: int) -> Fraction:
    """``lambda_{k,r}`` from the Euler/Bernoulli closed form."""
    _check_lambda_args(k, r)
    return Fraction(factorial(k) * euler_number(r - 1) * euler_number(k - r - 1),
                    2 ** (k - 1) * (2 ** k - 1) * factorial(r - 1) * factorial(k - r - 1)) / bernoulli(k)


def lambda_kr_from_lvalues(k: int, r: int) -> Fraction:
    """``4 L(chi4,r) L(chi4,k-r) / L(chi0,k)`` with each value normalized by ``(2 pi i)``."""
    _check_lambda_args(k, r)
    q = ell4_odd(r) * ell4_odd(k - r) * 4 / GaussianRational(ell0_even(k))
    if q.im:
        raise ArithmeticError("lambda came out non-real")
    return q.re


def num_modular_relations(k: int) -> int:
    return (k - 2) // 4


def _check_atilde_args(k: int, j: int):
    if k < 6 or k % 2:
        raise ValueError("k must be even and >= 6")
    if not 1 <= j <= num_modular_relations(k):
        raise ValueError(f"j must lie in 1..{num_modular_relations(k)}")


def atilde_vector(k: int, j: int, paper_literal: bool = False) -> tuple:
    """Coefficients ``(a~_{k,j,1}, ..., a~_{k,j,k-1})`` of ``T~(p, k-p)``.

    The correction term is doubled at ``p = k-1``, matching the half-weighted
    ``H~_{k-1,1}`` in the Eisenstein decomposition.  ``paper_literal`` doubles
    it at ``p = 1`` instead.
    """
    _check_atilde_args(k, j)
    r = 2 * j + 1
    common = Fraction(k, 2 ** k - 1) * comb(k - 2, r - 1) \
        * euler_number(r - 1) * euler_number(k - r - 1) / bernoulli(k)
    doubled = 1 if paper_literal else k - 1
    out = []
    for p in range(1, k):
        factor = Fraction(2 if p == doubled else 1, 2 ** (p + 1))
        out.append(comb(k - p - 1, r - 1) + comb(k - p - 1, k - r - 1) - factor * common)
    return tuple(out)


def atilde_from_constant_terms(k: int, j: int, N: int = 4) -> tuple:
    """Rebuild the relation vector from the series themselves.

    The shuffle expansion of ``H~_r H~_{k-r}`` minus ``lambda/(k-1)`` times the
    double-series decomposition of ``(k-1) G~_k`` has vanishing constant term;
    its opaque constant, read as a combination of ``T~(p, k-p)``, is the vector.
    Along the way the exact constants of ``H~_r H~_{k-r}`` and ``lambda G~_k``
    are checked to agree.
    """
    from .eisenstein import eis_G, eis_H, eis_H2
    from .qseries import linear_combination, series_mul

    _check_atilde_args(k, j)
    r = 2 * j + 1
    lam = lambda_kr_from_lvalues(k, r)
    prod_const = series_mul(eis_H(r, N), eis_H(k - r, N)).constant.value
    if prod_const != eis_G(k, N).constant.value * lam:
        raise ArithmeticError("constant of H~_r H~_(k-r) differs from lambda G~_k")
    terms = [(comb(p - 1, r - 1) + comb(p - 1, k - r - 1), eis_H2(k - p, p, N)) for p in range(1, k)]
    g_terms = [(-lam / (k - 1) * Fraction(2) ** (k - 2 - p), eis_H2(p, k - p, N)) for p in range(1, k)]
    g_terms.append((-lam / (k - 1) / 2, eis_H2(k - 1, 1, N)))
    combo = linear_combination(terms + g_terms)
    coeffs = {lab: c for lab, c in combo.constant.labels}
    out = []
    for p in range(1, k):
        c = coeffs.get(("T", p, k - p), GaussianRational(0))
        if c.im:
            raise ArithmeticError("non-real relation coefficient")
        out.append(c.re)
    return tuple(out)


@dataclass(frozen=True)
class Erratum:
    where: str
    index: int
    printed: Fraction
    corrected: Fraction


ERRATA = (
    Erratum("atilde(6,1)", 5, Fraction(3, 4), Fraction(-3, 4)),
    Erratum("atilde(10,2)", 1, Fraction(2580, 31), Fraction(2590, 31)),
)


# ---------------------------------------------------------------------------
# Period-polynomial vectors
# ---------------------------------------------------------------------------


def _check_conj_args(N: int, k: int, j: int):
    if N not in (2, 4):
        raise ValueError("N must be 2 or 4")
    if k < 4 or k % 2:
        raise ValueError("k must be even and >= 4")
    if not 1 <= j <= (k - 2) // 2:
        raise ValueError(f"j must lie in 1..{(k - 2) // 2}")


def stilde_poly(N: int, k: int, j: int) -> Poly:
    _check_conj_args(N, k, j)
    n = k - 2 * j
    coeffs = [Fraction(0)] * (k - 1)
    # X^(k-2) B0_n(1/(N X)): the X^(n-i) term of B0_n becomes N^(i-n) X^(k-2-n+i)
    for i in range(0, n + 1, 2):
        coeffs[k - 2 - n + i] += Fraction(N) ** (n - 1) / n * comb(n, i) * bernoulli(i) / Fraction(N) ** (n - i)
    s = Poly(coeffs) - b0_poly(2 * j) * Fraction(1, 2 * j)
    ratio = Fraction(k) * bernoulli(2 * j) * bernoulli(n) / (2 * j * n * bernoulli(k))
    denom = 1 - Fraction(1, 2 ** k)
    tail = Poly.monomial(k - 2, (1 - Fraction(1, 2 ** (2 * j))) / denom / N) \
        - (1 - Fraction(2 ** (2 * j), 2 ** k)) / denom / Fraction(N) ** (2 * j)
    return s - tail * ratio


def _linear_pow(a, b, e: int) -> list[Fraction]:
    return [comb(e, i) * Fraction(a) ** i * Fraction(b) ** (e - i) for i in range(e + 1)]


def p_poly(N: int, k: int, j: int) -> HomogPoly:
    """``(-2X + 2Y)^(k-2) S~((X + Y)/(-2X + 2Y))`` as a homogeneous polynomial."""
    s = stilde_poly(N, k, j)
    w = k - 2
    out = [Fraction(0)] * (w + 1)
    for d in range(s.degree + 1):
        c = s[d]
        if not c:
            continue
        left = _linear_pow(1, 1, d)
        right = _linear_pow(-2, 2, w - d)
        for i, x in enumerate(left):
            for m, y in enumerate(right):
                out[i + m] += c * x * y
    return HomogPoly(out)


def conj_vector(N: int, k: int, j: int) -> tuple:
    """``a_{N,k,j,i}`` for ``i = 1..k-1``."""
    shifted = act(p_poly(N, k, j).even_part(), T)
    return tuple(shifted[i - 1] / comb(k - 2, i - 1) for i in range(1, k))


@dataclass(frozen=True)
class ExpressResult:
    N: int
    k: int
    j: int
    consistent: bool
    coefficients: tuple | None

    def to_json(self) -> dict:
        from .exact_math import fmt_rational
        return {
            "N": self.N, "k": self.k, "j": self.j, "consistent": self.consistent,
            "coefficients": None if self.coefficients is None else [fmt_rational(c) for c in self.coefficients],
        }


def express_in_modular(N: int, k: int, j: int, paper_literal: bool = False) -> ExpressResult:
    """Write ``conj_vector(N,k,j)`` in the basis ``atilde_vector(k, 1..[(k-2)/4])``."""
    _check_conj_args(N, k, j)
    target = conj_vector(N, k, j)
    d = num_modular_relations(k)
    if d == 0:
        ok = not any(target)
        return ExpressResult(N, k, j, ok, () if ok else None)
    basis = [atilde_vector(k, jj, paper_literal) for jj in range(1, d + 1)]
    M = RationalMatrix.from_rows([[basis[c][row] for c in range(d)] for row in range(k - 1)])
    sol = mat_solve(M, target)
    return ExpressResult(N, k, j, sol is not None, None if sol is None else tuple(sol))


def conj_span_dims(k: int) -> tuple:
    """``(dim span P^ev_{4,k,j}, dim span P^ev_{2,k,j}, containment)``."""
    if k < 6 or k % 2:
        raise ValueError("k must be even and >= 6")
    js = range(1, (k - 2) // 2 + 1)
    four = [p_poly(4, k, j).even_part().coeffs for j in js]
    two = [p_poly(2, k, j).even_part().coeffs for j in js]
    d4 = vectors_rank(four)
    d2 = vectors_rank(two)
    contained = vectors_rank(four + two) == d4
    return d4, d2, contained
