"""Exact coefficient-wise checks of the product and decomposition identities,
the imaginary-part vanishing statement, the theta identity, a direct lattice
sum oracle, and the finite identity suites behind the proofs.
"""
from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .exact_math import GaussianRational, I, LForm, LGen
from .qseries import (
    QSeries, series_add, series_mul, series_imag, linear_combination,
    first_mismatch, evaluate, default_terms,
)
from .eisenstein import eis_H, eis_G, eis_H2
from .special_numbers import (
    bernoulli, chi4, euler_number, euler_poly, power_sum_chi0,
)

__all__ = [
    "VerifyReport", "verify_shuffle", "verify_G_decomp", "verify_G_product",
    "verify_im_vanishing", "verify_theta", "lattice_oracle", "qexp_value_H2",
    "generator_values", "im_vanishing_combination",
    "check_binomial_alternating_sum", "check_sequence_identity_first",
    "check_sequence_identity_second", "check_bernoulli_euler_convolution",
    "check_euler_reflection", "check_euler_character_power_sum",
]


@dataclass
class VerifyReport:
    claim: str
    params: dict
    status: str
    first_failure: tuple | None
    checked_through: int
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @classmethod
    def from_mismatch(cls, claim, params, mismatch, N, **details) -> "VerifyReport":
        return cls(claim, dict(params), "fail" if mismatch else "pass", mismatch, N, details)

    def to_json(self) -> dict:
        ff = None
        if self.first_failure is not None:
            n, lhs, rhs = self.first_failure
            ff = {"n": n, "lhs": _json_coeff(lhs), "rhs": _json_coeff(rhs)}
        return {
            "claim": self.claim,
            "params": self.params,
            "status": self.status,
            "first_failure": ff,
            "checked_through": self.checked_through,
            **({"details": self.details} if self.details else {}),
        }


def _json_coeff(c):
    if isinstance(c, LForm):
        return c.to_json()
    if isinstance(c, GaussianRational):
        return c.to_json()
    return c


def _N(N):
    return default_terms() if N is None else N


# ---------------------------------------------------------------------------
# q-series identities
# ---------------------------------------------------------------------------


def verify_shuffle(k1: int, k2: int, N: int | None = None) -> VerifyReport:
    """``H~_{k1} H~_{k2} = sum_p (C(p-1,k1-1) + C(p-1,k2-1)) H~_{K-p,p}`` on q^1..q^N."""
    N = _N(N)
    if k1 < 1 or k2 < 1:
        raise ValueError("weights must be >= 1")
    K = k1 + k2
    lhs = series_mul(eis_H(k1, N), eis_H(k2, N))
    terms = [(comb(p - 1, k1 - 1) + comb(p - 1, k2 - 1), eis_H2(K - p, p, N)) for p in range(1, K)]
    rhs = linear_combination(terms)
    return VerifyReport.from_mismatch("shuffle", {"k1": k1, "k2": k2, "N": N},
                                      first_mismatch(lhs, rhs), N)


def _require_even(k: int):
    if k < 4 or k % 2:
        raise ValueError("k must be even and >= 4")


def verify_G_decomp(k: int, N: int | None = None) -> VerifyReport:
    """``(k-1) G~_k = sum_{p=1}^{k-1} 2^(k-2-p) H~_{p,k-p} + H~_{k-1,1}/2`` on q^1..q^N."""
    N = _N(N)
    _require_even(k)
    lhs = eis_G(k, N).scale(k - 1)
    terms = [(Fraction(2) ** (k - 2 - p), eis_H2(p, k - p, N)) for p in range(1, k)]
    terms.append((Fraction(1, 2), eis_H2(k - 1, 1, N)))
    rhs = linear_combination(terms)
    return VerifyReport.from_mismatch("g-decomp", {"k": k, "N": N}, first_mismatch(lhs, rhs), N)


def verify_G_product(k: int, N: int | None = None) -> VerifyReport:
    """``2(k-1) G~_k = sum_{p odd} H~_{k-p} H~_p``, constant terms included."""
    N = _N(N)
    _require_even(k)
    lhs = eis_G(k, N).scale(2 * (k - 1))
    rhs = None
    for p in range(1, k, 2):
        t = series_mul(eis_H(k - p, N), eis_H(p, N))
        rhs = t if rhs is None else series_add(rhs, t)
    mismatch = first_mismatch(lhs, rhs)
    if mismatch is None and lhs.constant.value != rhs.constant.value:
        mismatch = (0, lhs.constant.value, rhs.constant.value)
    return VerifyReport.from_mismatch("g-product", {"k": k, "N": N}, mismatch, N)


def im_vanishing_combination(k: int, N: int) -> QSeries:
    """``sum_{r=1}^{k-1} 2^(r-2) H~_{k-r,r} + H~_{k-1,1}/2``."""
    terms = [(Fraction(2) ** (r - 2), eis_H2(k - r, r, N)) for r in range(1, k)]
    terms.append((Fraction(1, 2), eis_H2(k - 1, 1, N)))
    return linear_combination(terms)


def verify_im_vanishing(k: int, N: int | None = None) -> VerifyReport:
    """Imaginary part of the combination vanishes while the combination does not."""
    N = _N(N)
    if k < 3 or k % 2 == 0:
        raise ValueError("k must be odd and >= 3")
    comb_series = im_vanishing_combination(k, N)
    im = series_imag(comb_series)
    mismatch = None
    for n, c in enumerate(im.coeffs, start=1):
        if c:
            mismatch = (n, c, LForm())
            break
    witness = next(((n, c) for n, c in enumerate(comb_series.coeffs, start=1) if c), None)
    details = {}
    if witness is not None:
        details["witness"] = {"n": witness[0], "coefficient": witness[1].to_json()}
    report = VerifyReport.from_mismatch("im-vanish", {"k": k, "N": N}, mismatch, N, **details)
    if witness is None:
        report.status = "fail"
        report.details["witness"] = None
    return report


def theta_squared(N: int) -> list[int]:
    """Coefficients of ``theta^2`` for ``q^0..q^N`` by direct convolution."""
    theta = [0] * (N + 1)
    n = 0
    while n * n <= N:
        theta[n * n] += 1 if n == 0 else 2
        n += 1
    return [sum(theta[i] * theta[m - i] for i in range(m + 1)) for m in range(N + 1)]


def verify_theta(N: int = 100) -> VerifyReport:
    """``4i H~_1 = theta^2`` including the constant term."""
    s = eis_H(1, N).scale(4 * I)
    th = theta_squared(N)
    lhs = QSeries(s.coeffs)
    rhs = QSeries(tuple(LForm.const(c) for c in th[1:]))
    mismatch = first_mismatch(lhs, rhs)
    if mismatch is None and s.constant.value != LForm.const(th[0]):
        mismatch = (0, s.constant.value, LForm.const(th[0]))
    return VerifyReport.from_mismatch("theta", {"N": N}, mismatch, N)


# ---------------------------------------------------------------------------
# Floating-point lattice oracle
# ---------------------------------------------------------------------------


def generator_values(c: float = 0.3718) -> dict:
    """Float values of the formal generators; ``c`` is the free constant."""
    import mpmath

    class _Values(dict):
        def __missing__(self, g: LGen):
            if g.kind == "Z":
                v = c if g.m == 1 else float((1 - mpmath.mpf(2) ** -g.m) * mpmath.zeta(g.m)
                                             / (2 * mpmath.pi) ** g.m)
            elif g.kind == "L":
                beta = (mpmath.zeta(g.m, 0.25) - mpmath.zeta(g.m, 0.75)) / mpmath.mpf(4) ** g.m
                v = float(beta / (2 * mpmath.pi) ** g.m) * (-1) ** (g.m // 2)
            else:
                v = 1.0
            self[g] = v
            return v

    return _Values()


def qexp_value_H2(k1: int, k2: int, tau: complex, N: int = 40, constant: complex | None = None) -> complex:
    """Evaluate the exact q-expansion of ``H~_{k1,k2}`` at ``tau`` with float generators."""
    from .ttilde_numeric import ttilde_double

    if constant is None:
        constant = ttilde_double(k1, k2).value
    q = cmath.exp(2j * math.pi * tau)
    return evaluate(eis_H2(k1, k2, N), q, generator_values(), constant)


def _tail_integral(z: complex, M: float, k: int, side: int) -> complex:
    """``int (z + x)^-k dx`` over ``x > M`` (side=+1) or ``x < -M`` (side=-1)."""
    if side > 0:
        return (z + M) ** (1 - k) / (k - 1)
    return -((z - M) ** (1 - k)) / (k - 1)


def _row_sum(z: complex, k: int, weights: np.ndarray, n: np.ndarray, mean: float, M: int) -> complex:
    vals = np.sum(weights * (z + n) ** (-k))
    if mean:
        # midpoint tails of the non-oscillating part beyond |n| = M
        vals += mean * (_tail_integral(z, M + 0.5, k, 1) + _tail_integral(z, M + 0.5, k, -1))
    return complex(vals)


def lattice_oracle(k1: int, k2: int, tau: complex, M: int = 400, n_cut: int = 200000) -> complex:
    """Direct evaluation of the ordered double lattice sum defining ``H~_{k1,k2}``.

    Rows of the lattice are grouped by ``(m1, m2)`` with ``|m| <= M`` and each
    row's ``n``-sums are truncated at ``|n| <= n_cut`` with an integral tail
    correction for the non-oscillating parts.  Rows with large ``m`` are
    exponentially small and are dropped once they fall below 1e-18.
    """
    if k1 < 2 or k2 < 3:
        raise ValueError("the lattice sum needs k1 >= 2 and k2 >= 3")
    tau = complex(tau)
    if tau.imag <= 0:
        raise ValueError("tau must lie in the upper half plane")
    K = k1 + k2
    n = np.arange(-n_cut, n_cut + 1, dtype=np.float64)
    ni = np.arange(-n_cut, n_cut + 1)
    w0 = (ni & 1).astype(np.float64)                                  # chi0(n)
    w4 = np.where(ni % 4 == 2, 1.0, np.where(ni % 4 == 0, -1.0, 0.0))  # chi4(n - 1)

    # m1 = m2 = 0: 0 < n1 < n2
    t = np.arange(1, n_cut + 1)
    odd = np.arange(1, 2 * n_cut, 2, dtype=np.float64)
    S = np.cumsum(odd ** (-float(k1)))
    lsh = float(np.sum(np.where(t % 2 == 1, 1.0, -1.0) * S / (2.0 * t) ** k2))
    total = complex(lsh)

    l0_k1 = float(np.sum(odd ** (-float(k1))))
    l0_k1 += 0.5 * (2 * n_cut) ** (1 - k1) / (k1 - 1)

    A = {}
    B = {}
    for m in range(1, M + 1):
        z = 4 * m * tau
        A[m] = _row_sum(z, k1, w0, n, 0.5, n_cut)
        B[m] = _row_sum(z, k2, w4, n, 0.0, n_cut)
        if abs(A[m]) < 1e-18 and abs(B[m]) < 1e-18:
            break
    ms = sorted(A)

    # m1 = 0 < m2
    total += l0_k1 * sum(B[m] for m in ms)

    # m1 = m2 > 0: n1 < n2
    for m in ms:
        z = 4 * m * tau
        a = w0 * (z + n) ** (-k1)
        b = w4 * (z + n) ** (-k2)
        below = np.concatenate(([0.0], np.cumsum(a)[:-1]))
        below = below + 0.5 * _tail_integral(z, n_cut + 0.5, k1, -1)
        row = complex(np.sum(b * below))
        total += row
        if abs(row) < 1e-18 and m > 2:
            break

    # 0 < m1 < m2
    prefix = 0j
    for m2 in ms:
        total += prefix * B[m2]
        prefix += A[m2]
    return total * 4 / (2j * math.pi) ** K


# ---------------------------------------------------------------------------
# Finite identity suites
# ---------------------------------------------------------------------------


def check_binomial_alternating_sum(alpha: int, beta: int, mu: int) -> bool:
    """``sum_nu (-1)^nu C(a+b-nu, a) C(mu, nu) = C(a+b-mu, b)`` for ``mu <= a+b``."""
    if mu > alpha + beta:
        raise ValueError("mu must not exceed alpha + beta")
    lhs = sum((-1) ** v * comb(alpha + beta - v, alpha) * comb(mu, v) for v in range(mu + 1))
    return lhs == comb(alpha + beta - mu, beta)


def check_sequence_identity_first(k1: int, k2: int, a, b) -> bool:
    """First binomial convolution identity between two sequences ``a``, ``b``.

    ``a`` and ``b`` are indexable with entries up to ``k1 + k2``.
    """
    lhs = Fraction(0)
    for i in range(k2):
        inner = Fraction(0)
        for j in range(k1 + i):
            inner += (-1) ** (k2 - i) * comb(k2 - i + j - 1, j) * a[k2 - i + j] * b[k1 + i - j]
        lhs += comb(k1 + i - 1, k1 - 1) * inner
    rhs = -sum((comb(k2 + i - 1, k2 - 1) * a[k1 - i] * b[k2 + i] for i in range(k1)), Fraction(0))
    return lhs == rhs


def check_sequence_identity_second(k1: int, k2: int, a, b) -> bool:
    """Second binomial convolution identity: the nested sum collapses to ``a_{k1} b_{k2}``."""
    lhs = Fraction(0)
    for i in range(k2):
        inner = Fraction(0)
        for j in range(k2 - i):
            inner += (-1) ** j * comb(k1 + i + j - 1, j) * a[k1 + i + j] * b[k2 - i - j]
        lhs += comb(k1 + i - 1, k1 - 1) * inner
    return lhs == a[k1] * b[k2]


def check_bernoulli_euler_convolution(k: int) -> bool:
    """``B_k/k (1 - 2^-k) = 4^-k sum_r C(k-2, r-1) E_{k-r-1} E_{r-1}`` for even ``k >= 4``."""
    lhs = bernoulli(k) / k * (1 - Fraction(1, 2 ** k))
    rhs = Fraction(sum(comb(k - 2, r - 1) * euler_number(k - r - 1) * euler_number(r - 1)
                       for r in range(1, k)), 4 ** k)
    return lhs == rhs


def check_euler_reflection(k: int, x) -> bool:
    x = Fraction(x)
    return euler_poly(k, 1 - x) == (-1) ** k * euler_poly(k, x)


def check_euler_character_power_sum(n: int, k: int) -> bool:
    """``sum_{w<n} chi4(w+1)(w/2)^k = chi4(n)/2 E_k((n+1)/2) - (E_k(1) - E_k(0))/4``, ``n`` odd."""
    if n % 2 == 0:
        raise ValueError("n must be odd")
    lhs = sum((chi4(w + 1) * Fraction(w, 2) ** k for w in range(n)), Fraction(0))
    rhs = Fraction(chi4(n), 2) * euler_poly(k, Fraction(n + 1, 2)) \
        - (euler_poly(k, 1) - euler_poly(k, 0)) / 4
    return lhs == rhs


def check_power_sum_chi0(n: int, k: int) -> bool:
    return power_sum_chi0(n, k) == sum(Fraction(w) ** (k - 1) for w in range(1, n, 2))


def random_sequence_checks(trials: int = 50, max_k: int = 8, seed: int = 0) -> bool:
    rng = random.Random(seed)
    for _ in range(trials):
        k1, k2 = rng.randint(1, max_k), rng.randint(1, max_k)
        a = [Fraction(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(k1 + k2 + 1)]
        b = [Fraction(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(k1 + k2 + 1)]
        if not (check_sequence_identity_first(k1, k2, a, b) and check_sequence_identity_second(k1, k2, a, b)):
            return False
    return True


__all__ += ["theta_squared", "check_power_sum_chi0", "random_sequence_checks"]
