from __future__ import annotations

from fractions import Fraction

import pytest

from eis4.exact_math import I, LForm, Zodd
from eis4.eisenstein import eis_G, eis_H, eis_H2, verify_diagonal_product
from eis4.qseries import OpaqueT2


def lf(x):
    return x if isinstance(x, LForm) else LForm.const(x)


def test_H3_terms():
    s = eis_H(3, 5)
    assert lf(s.constant.value) == lf(I / 128)
    assert lf(s[1]) == lf(-I / 32)


def test_G4_terms():
    s = eis_G(4, 5)
    assert lf(s.constant.value) == lf(Fraction(1, 1536))
    assert not lf(s[1])
    assert lf(s[2]) == lf(Fraction(-1, 96))


def test_H1_is_theta_squared():
    s = eis_H(1, 8).scale(4 * I)
    assert lf(s.constant.value) == lf(1)
    assert [lf(c) for c in s.coeffs[:5]] == [lf(x) for x in (4, 4, 0, 4, 8)]


def test_double_series_constant_is_opaque():
    assert eis_H2(2, 3, 4).constant == OpaqueT2(2, 3)


@pytest.mark.parametrize("k1, k2", [(1, 1), (2, 3), (4, 4), (3, 5), (6, 2)])
def test_free_constant_cancels(k1, k2):
    for c in eis_H2(k1, k2, 20).coeffs:
        assert not lf(c).coeff(Zodd(1))


def test_support_bound():
    # only odd zeta values of weight < k1 + k2 and the constant can appear
    for k1, k2 in [(2, 3), (3, 4), (1, 6)]:
        K = k1 + k2
        for c in eis_H2(k1, k2, 15).coeffs:
            for g in lf(c).support():
                assert g.m < K


@pytest.mark.parametrize("k1, k2", [(1, 1), (2, 3), (4, 4)])
def test_diagonal_product(k1, k2):
    assert verify_diagonal_product(k1, k2, 20).passed


def test_domain_errors():
    with pytest.raises(ValueError):
        eis_H(0, 5)
    with pytest.raises(ValueError):
        eis_G(3, 5)
