"""Bernoulli/Euler numbers and polynomials, mod-4 characters, divisor sums.

Bernoulli numbers use the ``t e^t / (e^t - 1)`` convention, so ``B_1 = +1/2``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exact_math import GaussianRational

__all__ = [
    "chi0", "chi4", "bernoulli", "euler_number", "euler_poly", "power_sum_chi0",
    "ell0_even", "ell4_odd", "sigma_chi0", "sigma_chi4", "sigma_chi4_shift",
    "b0_poly", "divisors", "Poly",
]


def chi0(n: int) -> int:
    """Trivial character mod 4."""
    return n & 1


def chi4(n: int) -> int:
    """Non-trivial character mod 4."""
    r = n % 4
    return 1 if r == 1 else (-1 if r == 3 else 0)


CHARACTERS = {"chi0": chi0, "chi4": chi4}


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple:
    # sum_{j<=m} C(m+1, j) B_j^- = 0 for the B_1 = -1/2 convention
    B = [Fraction(1)]
    for m in range(1, n + 1):
        if m > 1 and m % 2:
            B.append(Fraction(0))
            continue
        s = sum(comb(m + 1, j) * B[j] for j in range(m))
        B.append(-s / (m + 1))
    return tuple(B)


def bernoulli(n: int) -> Fraction:
    if n < 0:
        raise ValueError("bernoulli index must be >= 0")
    if n == 1:
        return Fraction(1, 2)
    size = max(n, 16)
    size = 1 << (size - 1).bit_length()
    return _bernoulli_table(size)[n]


@lru_cache(maxsize=None)
def _euler_table(n: int) -> tuple:
    E = [0] * (n + 1)
    E[0] = 1
    for m in range(2, n + 1, 2):
        # sum_{j=0}^{m/2} C(m, 2j) E_{2j} = 0
        E[m] = -sum(comb(m, j) * E[j] for j in range(0, m, 2))
    return tuple(E)


def euler_number(n: int) -> int:
    if n < 0:
        raise ValueError("euler index must be >= 0")
    size = max(n, 16)
    size = 1 << (size - 1).bit_length()
    return _euler_table(size)[n]


def euler_poly(k: int, x) -> Fraction:
    """Euler polynomial ``E_k(x)`` with generating function ``2 e^{xt}/(e^t + 1)``."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    x = Fraction(x)
    y = x - Fraction(1, 2)
    return sum(
        (comb(k, n) * Fraction(euler_number(n), 2 ** n) * y ** (k - n) for n in range(k + 1)),
        Fraction(0),
    )


def power_sum_chi0(n: int, k: int) -> Fraction:
    """Closed form for ``sum_{w < n, w odd} w^(k-1)`` when ``n`` is even."""
    if n < 2 or n % 2:
        raise ValueError("power_sum_chi0 needs an even n >= 2")
    if k < 1:
        raise ValueError("k must be >= 1")
    total = sum(
        (comb(k, j) * bernoulli(j) * (1 - Fraction(2) ** (j - 1)) * Fraction(n) ** (k - j)
         for j in range(k)),
        Fraction(0),
    )
    return total / k


def ell0_even(k: int) -> Fraction:
    """``(2 pi i)^-k L(chi0, k)`` for even ``k``."""
    if k < 2 or k % 2:
        raise ValueError("ell0_even needs an even k >= 2")
    return -(1 - Fraction(1, 2 ** k)) * bernoulli(k) / (2 * factorial(k))


def ell4_odd(k: int) -> GaussianRational:
    """``(2 pi i)^-k L(chi4, k)`` for odd ``k``; purely imaginary."""
    if k < 1 or k % 2 == 0:
        raise ValueError("ell4_odd needs an odd k >= 1")
    return GaussianRational(0, -Fraction(euler_number(k - 1), 2 ** (2 * k + 1) * factorial(k - 1)))


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple:
    if n < 1:
        raise ValueError("divisors of a non-positive integer")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def sigma_chi4(j: int, n: int) -> int:
    return sum(chi4(d) * d ** j for d in divisors(n))


def sigma_chi0(j: int, n: int) -> int:
    return sum(d ** j for d in divisors(n) if d & 1)


def sigma_chi4_shift(j: int, n: int) -> int:
    return sum(chi4(d + 1) * d ** j for d in divisors(n))


class Poly:
    """Dense univariate polynomial with rational coefficients (index = degree)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, d: int, c=1) -> "Poly":
        return cls([0] * d + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> Fraction:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly([-Fraction(other)]))

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self.coeffs == other.coeffs

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"


def b0_poly(n: int) -> Poly:
    """``sum_{j even} C(n, j) B_j X^(n-j)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(0, n + 1, 2):
        coeffs[n - j] = comb(n, j) * bernoulli(j)
    return Poly(coeffs)
