from __future__ import annotations

from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)


@st.composite
def gaussian_rationals(draw):
    from eis4.exact_math import GaussianRational
    return GaussianRational(draw(fractions), draw(fractions))


def small_matrix(max_rows: int = 5, max_cols: int = 5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


def square_matrix(max_n: int = 5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.fractions(-9, 9, max_denominator=5), min_size=n, max_size=n),
                           min_size=n, max_size=n))


ZERO = Fraction(0)
