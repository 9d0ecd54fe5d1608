from __future__ import annotations


import pytest
from hypothesis import given, strategies as st

from eis4.exact_math import mat_rank
from eis4.period_polys import (
    DELTA, EPS, GL2Mat, GroupRingElem, HomogPoly, J, T, U, a_coeff, act, act_ring,
    build_Atilde, build_Mk, c_coeff, check_det_ord2, delta_k, delta_tilde_kernel_dim,
    det_ord2_formula, expected_rank_Mk, im_delta_dim, im_space_rank_bruteforce, r_period,
    r_period_via_symmetries, rep_matrix,
)

ints = st.integers(-3, 3)
mats = st.builds(GL2Mat, ints, ints, ints, ints)
polys = st.integers(0, 5).flatmap(
    lambda w: st.lists(st.integers(-5, 5), min_size=w + 1, max_size=w + 1).map(HomogPoly))


@given(polys, mats, mats)
def test_right_action(P, g, h):
    assert act(act(P, g), h) == act(P, g @ h)
    assert act_ring(P, GroupRingElem.of(g) * h) == act(act(P, g), h)


def test_generator_relations():
    assert EPS @ U @ U == J @ U @ EPS
    assert U @ U @ U == J
    assert U @ EPS @ DELTA == T


def test_rep_matrix_is_Mk_transpose():
    for k in (5, 6, 9):
        R = rep_matrix(delta_k(k), k).to_lists()
        M = build_Mk(k).T().to_lists()
        assert [row[:-1] for row in R] == M
        assert all(row[-1] == 0 for row in R)


@pytest.mark.parametrize("k, r", [(6, 3), (9, 7), (12, 8)])
def test_rank(k, r):
    assert mat_rank(build_Mk(k)) == r == expected_rank_Mk(k) == im_delta_dim(k)


@pytest.mark.parametrize("k, r", [(6, 3), (7, 5), (10, 6)])
def test_im_rank_bruteforce(k, r):
    assert im_space_rank_bruteforce(k, 40) == r


@pytest.mark.parametrize("k, d", [(6, 1), (8, 1), (12, 2), (18, 4)])
def test_kernel_dim(k, d):
    assert delta_tilde_kernel_dim(k) == d


def test_coefficients():
    assert c_coeff(6, 1, 2) == 60
    assert c_coeff(6, 1, 4) == -240
    assert a_coeff(6, 1, 2) == -180
    # odd Bernoulli index >= 3 vanishes
    assert c_coeff(10, 1, 3) == 0


def test_det_examples():
    r = check_det_ord2(6)
    assert r.det == -180 and r.ord2_det == 2 and r.status == "pass"
    assert det_ord2_formula(8) == 8 == check_det_ord2(8).ord2_det
    assert det_ord2_formula(12) == 22 == check_det_ord2(12).ord2_det
    assert build_Atilde(6).to_lists() == [[-180]]


def test_r_period_parity():
    with pytest.raises(ValueError):
        r_period(10, 2, 4)


@pytest.mark.parametrize("w", [6, 10, 16])
def test_r_period_symmetric(w):
    for n in range(1, w):
        for m in range(1, w):
            try:
                a, b = r_period(w, n, m), r_period(w, m, n)
            except ValueError:
                continue
            assert a == b


def test_closed_form_matches_direct_periods():
    checked = 0
    for w in range(4, 21, 2):
        for n in range(1, w):
            for m in range(1, w):
                try:
                    a = r_period(w, n, m)
                except ValueError:
                    continue
                b = r_period_via_symmetries(w, n, m)
                if b is not None:
                    assert a == b
                    checked += 1
    assert checked > 50
