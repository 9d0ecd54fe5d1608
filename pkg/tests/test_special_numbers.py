from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eis4.exact_math import I
from eis4.special_numbers import (
    Poly, b0_poly, bernoulli, chi0, chi4, divisors, ell0_even, ell4_odd, euler_number,
    euler_poly, power_sum_chi0, sigma_chi0, sigma_chi4, sigma_chi4_shift,
)


@pytest.mark.parametrize("n, b", [(0, 1), (1, Fraction(1, 2)), (2, Fraction(1, 6)),
                                  (3, 0), (12, Fraction(-691, 2730))])
def test_bernoulli(n, b):
    assert bernoulli(n) == b


@pytest.mark.parametrize("n, e", [(0, 1), (1, 0), (2, -1), (4, 5), (6, -61), (8, 1385)])
def test_euler_numbers(n, e):
    assert euler_number(n) == e


def test_euler_poly():
    assert euler_poly(1, 7) == Fraction(13, 2)
    assert euler_poly(0, Fraction(3, 5)) == 1


@given(st.integers(0, 14), st.fractions(-5, 5, max_denominator=12))
def test_euler_poly_reflection(k, x):
    assert euler_poly(k, 1 - x) == (-1) ** k * euler_poly(k, x)


@given(st.integers(0, 14))
def test_euler_number_from_poly(k):
    assert euler_number(k) == 2 ** k * euler_poly(k, Fraction(1, 2))


@pytest.mark.parametrize("n, k, v", [(4, 2, 4), (2, 1, 1), (6, 3, 35)])
def test_power_sum_chi0(n, k, v):
    assert power_sum_chi0(n, k) == v


def test_characters():
    assert [chi0(n) for n in range(6)] == [0, 1, 0, 1, 0, 1]
    assert [chi4(n) for n in range(6)] == [0, 1, 0, -1, 0, 1]


def test_ell0_even():
    assert ell0_even(2) == Fraction(-1, 32)
    assert ell0_even(4) == Fraction(1, 1536)
    with pytest.raises(ValueError):
        ell0_even(3)


def test_ell4_odd():
    assert ell4_odd(1) == -I / 8
    assert ell4_odd(3) == I / 256
    with pytest.raises(ValueError):
        ell4_odd(2)


def test_divisor_sums():
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert sigma_chi4(0, 1) == 1 and sigma_chi4(0, 5) == 2 and sigma_chi4(2, 3) == -8
    assert sigma_chi0(1, 6) == 4 and sigma_chi0(0, 8) == 1 and sigma_chi0(5, 1) == 1
    assert sigma_chi4_shift(3, 2) == -8 and sigma_chi4_shift(1, 4) == 2
    assert all(sigma_chi4_shift(j, n) == 0 for j in range(4) for n in range(1, 30, 2))


@given(st.integers(1, 60), st.integers(1, 60))
def test_sigma_chi4_multiplicative(m, n):
    from math import gcd
    if gcd(m, n) == 1:
        assert sigma_chi4(2, m * n) == sigma_chi4(2, m) * sigma_chi4(2, n)


def test_b0_poly():
    assert b0_poly(0) == Poly([1])
    assert b0_poly(2) == Poly([Fraction(1, 6), 0, 1])
    assert b0_poly(4) == Poly([Fraction(-1, 30), 0, 1, 0, 1])
