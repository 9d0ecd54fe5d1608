from __future__ import annotations

from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

from eis4.exact_math import (
    GaussianRational, I, LForm, LFormProductError, Leven, ONE, RationalMatrix, Zodd,
    fmt_rational, lform_imag, mat_det, mat_inverse, mat_kernel, mat_rank, mat_solve, ord2,
    parse_rational,
)
from conftest import gaussian_rationals, small_matrix, square_matrix


@pytest.mark.parametrize("x, v", [(-180, 2), (Fraction(1, 6), -1), (1, 0), (Fraction(8, 3), 3)])
def test_ord2_examples(x, v):
    assert ord2(x) == v


def test_ord2_zero_is_infinite():
    assert ord2(0) == math.inf


@given(st.fractions(max_denominator=100).filter(bool), st.fractions(max_denominator=100).filter(bool))
def test_ord2_multiplicative(a, b):
    assert ord2(a * b) == ord2(a) + ord2(b)


@given(gaussian_rationals(), gaussian_rationals(), gaussian_rationals())
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == GaussianRational(0)
    if a:
        assert a * a.inverse() == GaussianRational(1)
        assert (b / a) * a == b


def test_gaussian_basics():
    assert I * I == GaussianRational(-1)
    z = GaussianRational(Fraction(1, 2), -3)
    assert z.to_json() == {"re": "1/2", "im": "-3/1"}
    assert GaussianRational.from_json(z.to_json()) == z
    assert complex(z) == complex(0.5, -3)


def test_fmt_roundtrip():
    assert fmt_rational(Fraction(-7, 3)) == "-7/3"
    assert fmt_rational(0) == "0/1"
    assert parse_rational("-7/3") == Fraction(-7, 3)


def test_lform_imag_examples():
    assert lform_imag(LForm.const(GaussianRational(3, 2))) == LForm.const(2)
    assert lform_imag(LForm.gen(Zodd(3), I)) == LForm.gen(Zodd(3), 1)
    assert not lform_imag(LForm.gen(Leven(2), 5))


def test_lform_products():
    a = LForm.gen(Zodd(3), 2)
    assert a * LForm.const(I) == LForm.gen(Zodd(3), 2 * I)
    with pytest.raises(LFormProductError):
        a * LForm.gen(Leven(2))


@given(gaussian_rationals(), gaussian_rationals(), gaussian_rationals(), gaussian_rationals())
def test_lform_imag_additive(a, b, c, d):
    f = LForm({ONE: a, Zodd(3): b})
    g = LForm({Zodd(3): c, Leven(4): d})
    assert (f + g).imag() == f.imag() + g.imag()
    assert f.real() + f.imag() * I == f


def test_lform_json_roundtrip():
    f = LForm({ONE: GaussianRational(1, 2), Zodd(5): GaussianRational(0, Fraction(-1, 3))})
    assert LForm.from_json(f.to_json()) == f
    assert set(f.to_json()) == {"1", "Z5"}


def test_rank_and_det_examples():
    assert mat_rank(RationalMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert mat_rank(RationalMatrix.identity(3)) == 3
    assert mat_det(RationalMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert mat_det(RationalMatrix.from_rows([[-180]])) == -180


def test_solve_and_kernel_examples():
    assert mat_solve(RationalMatrix.identity(2), [1, 2]) == [1, 2]
    assert mat_solve(RationalMatrix.from_rows([[1, 1], [1, 1]]), [0, 1]) is None
    assert len(mat_kernel(RationalMatrix.zeros(2, 2))) == 2
    assert mat_kernel(RationalMatrix.identity(3)) == []


def _rref_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0])
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


@given(small_matrix())
def test_rank_transpose_and_rref(rows):
    M = RationalMatrix.from_rows(rows)
    assert mat_rank(M) == mat_rank(M.T())
    assert mat_rank(M) == _rref_rank(rows)


@given(small_matrix())
def test_kernel_vectors_are_annihilated(rows):
    M = RationalMatrix.from_rows(rows)
    ker = mat_kernel(M)
    assert len(ker) == M.cols - mat_rank(M)
    for v in ker:
        assert not any(M.apply(v))


@given(square_matrix())
def test_det_inverse(rows):
    M = RationalMatrix.from_rows(rows)
    d = mat_det(M)
    if d == 0:
        assert mat_rank(M) < M.rows
        return
    inv = mat_inverse(M)
    assert d * mat_det(inv) == 1
    assert (M @ inv).to_lists() == RationalMatrix.identity(M.rows).to_lists()
