import pytest

from thompson_tsp.dyadic import Dyadic
from thompson_tsp.generators import (
    RECTANGLE_X0,
    RECTANGLE_X1,
    CalibrationError,
    calibrate,
    calibration_checks,
    generator_map,
    infinite_relations,
    standard_generators,
    xfin_relations,
)
from thompson_tsp.plmap import (
    IDENTITY,
    commute,
    conjugate,
    is_identity_on,
    pl_compose,
    pl_evaluate,
    pl_invert,
    pl_power,
)

from conftest import element


def test_calibration_needs_the_flip_and_then_passes_everything():
    cal = calibrate()
    assert cal.orientation == "order flipped"
    first, second = cal.attempts
    assert not all(first[1].values())
    assert all(second[1].values())
    assert (cal.x0, cal.x1) == (pl_invert(RECTANGLE_X0), pl_invert(RECTANGLE_X1))


def test_calibration_fails_loudly_on_a_broken_table():
    with pytest.raises(CalibrationError, match="x1"):
        calibrate(RECTANGLE_X0, RECTANGLE_X0)


def test_xfin_relations_hold():
    x0, x1 = standard_generators()
    assert xfin_relations(x0, x1) == {k: True for k in xfin_relations(x0, x1)}
    # the same relations written out by hand
    x0x1 = pl_compose(x0, x1)
    assert conjugate(x1, pl_power(x0, 2)) == conjugate(x1, x0x1)
    assert conjugate(x1, pl_power(x0, 3)) == conjugate(x1, pl_compose(pl_power(x0, 2), x1))


def test_support_facts():
    assert is_identity_on(element("b"), (0, "1/2"))
    assert is_identity_on(element("abAA"), ("1/2", 1))
    assert all(calibration_checks(*standard_generators()).values())


def test_u_and_v_commute():
    assert commute(element("b"), element("abAA"))


def test_half_under_x0():
    # right action with the calibrated maps sends 1/2 up
    assert pl_evaluate(element("a"), "1/2") == Dyadic(3, 2)
    assert pl_evaluate(element("A"), "1/2") == Dyadic(1, 2)


def test_generator_map_low_indices():
    x0, x1 = standard_generators()
    assert generator_map(0) == x0
    assert generator_map(1) == x1
    assert generator_map(2) == element("Aba")
    with pytest.raises(ValueError):
        generator_map(-1)


def test_x2_is_trivial_beyond_one_half():
    x2 = generator_map(2)
    assert is_identity_on(x2, (0, "1/2"))
    assert is_identity_on(x2, (0, "3/4"))
    assert not is_identity_on(x2, (0, "7/8"))


def test_x2_x0_equals_x0_x3():
    assert pl_compose(generator_map(2), generator_map(0)) == pl_compose(generator_map(0), generator_map(3))


def test_infinite_presentation_relations_up_to_six():
    rel = infinite_relations(6)
    assert len(rel) == 21
    assert all(rel.values())


def test_generators_are_pairwise_distinct():
    gens = [generator_map(k) for k in range(8)]
    assert len(set(gens)) == 8
    assert IDENTITY not in gens
