from __future__ import annotations

import math

import mpmath
import numpy as np
import pytest

from eis4.ttilde_numeric import (
    TValueDisagreement, alternating_cvz, alternating_euler_averaging, shuffle_constant_residual,
    ttilde_double, ttilde_single, verify_relation_numeric,
)


def test_accelerators_on_log2():
    assert abs(alternating_cvz(lambda t: 1 / (t + 1)) - math.log(2)) < 1e-14
    terms = 1 / np.arange(1, 3001, dtype=float)
    assert abs(alternating_euler_averaging(terms) - math.log(2)) < 1e-12


def test_single_values():
    assert ttilde_single(1).value == -0.25j
    assert ttilde_single(1).method == "closed_form"
    assert abs(ttilde_single(3).value - 1j / 128) < 1e-18
    v = ttilde_single(2)
    assert abs(v.value - float(-mpmath.catalan / (2 * mpmath.pi ** 2))) < 1e-14


def test_double_11():
    assert abs(ttilde_double(1, 1).value - (-1 / 32)) < 1e-14


def test_double_rejects_bad_tol():
    with pytest.raises(ValueError):
        ttilde_double(2, 3, tol=0)
    with pytest.raises(TValueDisagreement):
        ttilde_double(1, 1, tol=1e-30)


@pytest.mark.parametrize("k1, k2", [(1, 1), (1, 2), (2, 3), (3, 3)])
def test_constant_shuffle(k1, k2):
    assert shuffle_constant_residual(k1, k2) < 1e-14


@pytest.mark.parametrize("k, j", [(6, 1), (8, 1)])
def test_relations(k, j):
    r = verify_relation_numeric(k, j, 1e-6)
    assert r.status == "pass" and r.relative_residual < 1e-12


def test_paper_literal_variant_fails():
    r = verify_relation_numeric(6, 1, 1e-6, paper_literal=True)
    assert r.status == "fail"
    for k, j in [(8, 1), (10, 1), (10, 2), (12, 2)]:
        r = verify_relation_numeric(k, j, 1e-6, paper_literal=True, rel_tol=1e-6)
        assert r.status == "fail" and r.relative_residual > 1e-3
