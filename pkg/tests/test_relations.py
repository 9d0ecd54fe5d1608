from __future__ import annotations

from fractions import Fraction as F

import pytest

from eis4.relations import (
    ERRATA, atilde_from_constant_terms, atilde_vector, conj_span_dims, conj_vector,
    express_in_modular, lambda_kr, lambda_kr_from_lvalues,
)


def test_lambda_two_routes():
    assert lambda_kr(6, 3) == lambda_kr_from_lvalues(6, 3) == F(15, 4)
    for k in range(6, 21, 2):
        for r in range(3, k - 2, 2):
            assert lambda_kr(k, r) == lambda_kr_from_lvalues(k, r)


def test_lambda_domain():
    with pytest.raises(ValueError):
        lambda_kr(6, 2)
    with pytest.raises(ValueError):
        lambda_kr(7, 3)


def test_atilde_examples():
    assert atilde_vector(8, 1) == (F(210, 17), F(105, 17), F(44, 17), F(27, 34), F(-7, 68),
                                   F(-75, 136), F(-75, 136))
    assert atilde_vector(6, 1) == (6, 3, F(1, 2), F(-3, 4), F(-3, 4))
    assert atilde_vector(10, 2)[0] == F(2590, 31)


@pytest.mark.parametrize("k, j", [(6, 1), (8, 1), (10, 1), (10, 2)])
def test_atilde_from_series_constants(k, j):
    assert atilde_from_constant_terms(k, j) == atilde_vector(k, j)


def test_paper_literal_differs_only_at_ends():
    a, b = atilde_vector(10, 1), atilde_vector(10, 1, paper_literal=True)
    assert [p for p in range(9) if a[p] != b[p]] == [0, 8]


def test_errata_consistent():
    for e in ERRATA:
        k, j = map(int, e.where[len("atilde("):-1].split(","))
        assert atilde_vector(k, j)[e.index - 1] == e.corrected != e.printed


def test_atilde_domain():
    with pytest.raises(ValueError):
        atilde_vector(6, 2)
    with pytest.raises(ValueError):
        atilde_vector(7, 1)


@pytest.mark.parametrize("key, vec", [
    ((4, 6, 1), (-8, -4, F(-2, 3), 1, 1)),
    ((2, 8, 1), (F(-1792, 51), F(-896, 51), F(-5632, 765), F(-192, 85), F(224, 765), F(80, 51), F(80, 51))),
    ((4, 10, 3), (F(-6144, 31), F(-3072, 31), F(-25808, 651), F(-2152, 217), F(3824, 3255), F(640, 217),
                  F(1270, 651), F(45, 31), F(45, 31))),
])
def test_conj_vector(key, vec):
    assert conj_vector(*key) == vec


@pytest.mark.parametrize("key, coeffs", [
    ((4, 6, 1), (F(-4, 3),)),
    ((2, 8, 1), (F(-128, 45),)),
    ((4, 10, 3), (F(-20, 21), F(-248, 105))),
])
def test_express(key, coeffs):
    r = express_in_modular(*key)
    assert r.consistent and r.coefficients == coeffs


def test_express_paper_literal_inconsistent():
    assert not express_in_modular(4, 6, 1, paper_literal=True).consistent


@pytest.mark.parametrize("k, dims", [(6, (1, 0, True)), (10, (2, 1, True)), (14, (3, 2, True))])
def test_span_dims(k, dims):
    assert conj_span_dims(k) == dims
