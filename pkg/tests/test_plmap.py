import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from thompson_tsp.dyadic import Dyadic
from thompson_tsp.plmap import (
    IDENTITY,
    PLMap,
    breakpoints_are_valid,
    is_identity_on,
    pl_compose,
    pl_evaluate,
    pl_invert,
    support,
)
from thompson_tsp.words import pl_from_word, random_word

from conftest import element, elements, naive_eval


def probe_points(*maps):
    pts = {Fraction(0), Fraction(1)}
    for m in maps:
        for x in m.xs:
            pts.add(x.to_fraction())
    ordered = sorted(pts)
    pts.update((a + b) / 2 for a, b in zip(ordered, ordered[1:]))
    return sorted(pts)


@given(elements(), elements())
def test_compose_pointwise_against_naive_evaluation(f, g):
    h = pl_compose(f, g)
    for t in probe_points(f, h):
        assert naive_eval(h.breakpoints, t) == naive_eval(g.breakpoints, naive_eval(f.breakpoints, t))


@given(elements(), elements(), elements())
def test_associative(f, g, h):
    assert pl_compose(pl_compose(f, g), h) == pl_compose(f, pl_compose(g, h))


@given(elements())
def test_identity_and_inverse(f):
    assert pl_compose(IDENTITY, f) == f
    assert pl_compose(f, IDENTITY) == f
    assert pl_compose(f, pl_invert(f)) == IDENTITY
    assert pl_compose(pl_invert(f), f) == IDENTITY


def test_invert_involution_on_100_random_words(std2):
    rng = random.Random(7)
    for _ in range(100):
        f = pl_from_word(random_word(std2, rng.randint(0, 20), rng))
        assert pl_invert(pl_invert(f)) == f
    assert pl_invert(IDENTITY) == IDENTITY


def test_x0_inverse_composition():
    x0 = element("a")
    assert pl_compose(pl_invert(x0), x0) == IDENTITY
    assert pl_compose(x0, pl_invert(x0)).is_identity()


@given(elements(max_size=20))
@settings(max_examples=60)
def test_products_have_power_of_two_slopes_and_dyadic_breakpoints(f):
    assert breakpoints_are_valid(f)
    for (x0, y0), (x1, y1) in zip(f.breakpoints, f.breakpoints[1:]):
        slope = (y1 - y0).to_fraction() / (x1 - x0).to_fraction()
        assert slope == Fraction(2) ** f.slopes[f.xs.index(x0)]
    assert all(a != b for a, b in zip(f.slopes, f.slopes[1:]))


def test_canonicalization_merges_collinear_points():
    redundant = PLMap.from_points([(0, 0), ("1/4", "1/4"), ("1/2", "1/2"), (1, 1)])
    assert redundant == IDENTITY and redundant.is_identity()
    again = PLMap.from_points(element("abA").breakpoints)
    assert again == element("abA")


def test_from_points_rejects_invalid_maps():
    with pytest.raises(ValueError):
        PLMap.from_points([(0, 0), ("1/2", "1/3"), (1, 1)])  # not dyadic
    with pytest.raises(ValueError):
        PLMap.from_points([(0, 0), ("1/2", "3/8"), (1, 1)])  # slope 3/4
    with pytest.raises(ValueError):
        PLMap.from_points([(0, 0), ("1/2", "1/2"), ("1/2", "3/4"), (1, 1)])
    with pytest.raises(ValueError):
        PLMap.from_points([("1/4", 0), (1, 1)])


def test_equal_functions_compare_equal_and_hash_equal():
    f = element("abAA")
    g = element("abAAbB")
    assert f == g and hash(f) == hash(g)
    assert len({f, g, element("b"), element("aA")}) == 3


def test_evaluate():
    assert pl_evaluate(IDENTITY, "3/8") == Dyadic(3, 3)
    assert pl_evaluate(element("b"), "1/4") == Dyadic(1, 2)
    assert pl_evaluate(element("a"), "1/2") == Dyadic(3, 2)
    assert pl_evaluate(element("A"), "1/2") == Dyadic(1, 2)
    with pytest.raises(ValueError):
        pl_evaluate(element("a"), "5/4")
    with pytest.raises(ValueError):
        pl_evaluate(element("a"), -1)


@given(elements())
def test_evaluate_matches_naive(f):
    for t in probe_points(f):
        assert pl_evaluate(f, Dyadic.from_fraction(t)).to_fraction() == naive_eval(f.breakpoints, t)


def test_support():
    assert support(IDENTITY) == []
    assert support(element("b")) == [(Fraction(1, 2), Fraction(1))]
    assert support(element("abAA")) == [(Fraction(0), Fraction(1, 2))]
    assert support(element("a")) == [(Fraction(0), Fraction(1))]


def test_support_can_end_at_a_non_dyadic_fixed_point():
    # the slope-4 segment crosses the diagonal at 7/24
    f = PLMap.from_points([(0, 0), ("1/4", "1/8"), ("3/8", "5/8"), ("7/8", "7/8"), (1, 1)])
    assert support(f) == [(0, Fraction(7, 24)), (Fraction(7, 24), Fraction(7, 8))]


@given(elements())
def test_support_points_are_moved(f):
    sup = support(f)
    assert (sup == []) == f.is_identity()
    for lo, hi in sup:
        mid = Dyadic.from_fraction(_dyadic_between(lo, hi))
        assert pl_evaluate(f, mid) != mid


def _dyadic_between(lo, hi):
    k = 1
    while True:
        n = (lo * 2**k).__floor__() + 1
        if Fraction(n, 2**k) < hi:
            return Fraction(n, 2**k)
        k += 1


def test_is_identity_on():
    assert is_identity_on(IDENTITY, (0, 1))
    assert is_identity_on(element("b"), (0, "1/2"))
    assert not is_identity_on(element("b"), (0, 1))
    assert is_identity_on(element("abAA"), ("1/2", 1))
    assert not is_identity_on(element("abAA"), ("1/4", 1))
    with pytest.raises(ValueError):
        is_identity_on(IDENTITY, ("3/4", "1/4"))


@given(elements())
def test_json_round_trip(f):
    assert PLMap.from_json(json.dumps(f.to_json())) == f
    for quad in f.to_json():
        assert len(quad) == 4
