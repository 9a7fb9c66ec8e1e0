from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from thompson_tsp.dyadic import Dyadic, log2_ratio

dyadics = st.builds(Dyadic, st.integers(-10**6, 10**6), st.integers(0, 40))


def test_normalized_fields():
    assert (Dyadic(4, 3).numerator, Dyadic(4, 3).exponent) == (1, 1)
    assert (Dyadic(0, 7).numerator, Dyadic(0, 7).exponent) == (0, 0)
    assert (Dyadic(3, -2).numerator, Dyadic(3, -2).exponent) == (12, 0)
    assert Dyadic(6, 0).exponent == 0


@given(dyadics)
def test_invariant_exponent_zero_or_odd(d):
    assert d.exponent == 0 or d.numerator % 2 == 1


@given(dyadics, dyadics)
def test_arithmetic_matches_fraction(a, b):
    fa, fb = a.to_fraction(), b.to_fraction()
    assert (a + b).to_fraction() == fa + fb
    assert (a - b).to_fraction() == fa - fb
    assert (a * b).to_fraction() == fa * fb
    assert (a < b) == (fa < fb)
    assert (a <= b) == (fa <= fb)
    assert (a == b) == (fa == fb)


@given(dyadics, st.integers(-20, 20))
def test_scale2(d, k):
    assert d.scale2(k).to_fraction() == d.to_fraction() * Fraction(2) ** k


def test_parse_and_str():
    assert Dyadic.parse("3/8") == Dyadic(3, 3)
    assert str(Dyadic(3, 3)) == "3/8"
    assert str(Dyadic(5)) == "5"
    with pytest.raises(ValueError):
        Dyadic.parse("1/3")


def test_log2_ratio():
    assert log2_ratio(Dyadic(1, 2), Dyadic(1, 1)) == -1
    assert log2_ratio(Dyadic(3, 1), Dyadic(3, 4)) == 3
    with pytest.raises(ValueError):
        log2_ratio(Dyadic(3), Dyadic(1))
