from __future__ import annotations


import mpmath
import pytest
from hypothesis import given, strategies as st

from eis4 import verifier


@pytest.mark.parametrize("k1, k2, N", [(1, 1, 20), (3, 4, 30), (2, 2, 30), (1, 6, 20)])
def test_shuffle(k1, k2, N):
    r = verifier.verify_shuffle(k1, k2, N)
    assert r.passed and r.checked_through == N


@pytest.mark.parametrize("k", [4, 8])
def test_G_decomp(k):
    assert verifier.verify_G_decomp(k, 30).passed


@pytest.mark.parametrize("k", [4, 10])
def test_G_product(k):
    assert verifier.verify_G_product(k, 30).passed


def test_G_parity():
    with pytest.raises(ValueError):
        verifier.verify_G_decomp(5, 30)


@pytest.mark.parametrize("k", [3, 5])
def test_im_vanishing(k):
    r = verifier.verify_im_vanishing(k, 20)
    assert r.passed
    assert r.details


def test_im_vanishing_parity():
    with pytest.raises(ValueError):
        verifier.verify_im_vanishing(4, 20)


def test_theta():
    assert verifier.verify_theta(100).passed
    t = verifier.theta_squared(10)
    assert t[5] == 8 and t[3] == 0


def test_reports_deterministic():
    assert verifier.verify_shuffle(2, 3, 15).to_json() == verifier.verify_shuffle(2, 3, 15).to_json()


def test_lattice_agrees_with_qexp():
    a = verifier.lattice_oracle(2, 3, 1j)
    b = verifier.qexp_value_H2(2, 3, 1j)
    assert abs(a - b) < 1e-6


def test_lattice_convergence_precondition():
    with pytest.raises(ValueError):
        verifier.lattice_oracle(1, 2, 1j)


def test_generator_values_match_closed_forms():
    from eis4.exact_math import Leven, Zodd
    v = verifier.generator_values()
    # (2 pi)^-3 zeta(3) (1 - 2^-3), and (2 pi i)^-2 L(chi4, 2) = -Catalan / (4 pi^2)
    assert abs(v[Zodd(3)] - float(mpmath.zeta(3) * (1 - mpmath.mpf(1) / 8) / (2 * mpmath.pi) ** 3)) < 1e-15
    assert abs(v[Leven(2)] - float(-mpmath.catalan / (4 * mpmath.pi ** 2))) < 1e-15


@given(st.integers(0, 10), st.integers(0, 10), st.data())
def test_binomial_alternating_sum(a, b, data):
    mu = data.draw(st.integers(0, a + b))
    assert verifier.check_binomial_alternating_sum(a, b, mu)


@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_sequence_identities(k1, k2, data):
    seq = st.lists(st.fractions(-20, 20, max_denominator=9), min_size=k1 + k2 + 1, max_size=k1 + k2 + 1)
    a, b = data.draw(seq), data.draw(seq)
    assert verifier.check_sequence_identity_first(k1, k2, a, b)
    assert verifier.check_sequence_identity_second(k1, k2, a, b)


@pytest.mark.parametrize("k", range(4, 101, 2))
def test_bernoulli_euler_convolution(k):
    assert verifier.check_bernoulli_euler_convolution(k)


@given(st.integers(0, 12), st.fractions(-4, 4, max_denominator=10))
def test_euler_reflection(k, x):
    assert verifier.check_euler_reflection(k, x)


@given(st.integers(0, 40).map(lambda t: 2 * t + 1), st.integers(1, 10))
def test_euler_character_power_sum(n, k):
    assert verifier.check_euler_character_power_sum(n, k)


@given(st.integers(1, 40).map(lambda t: 2 * t), st.integers(1, 10))
def test_power_sum_chi0(n, k):
    assert verifier.check_power_sum_chi0(n, k)
