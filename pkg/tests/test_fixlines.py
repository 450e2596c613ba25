import pytest

from pencilforge.fixlines import (PRINTED_FIX_LINES, class_intersections, fix_lines, fix_lines_of,
                                  line_intersections, line_orbit, ruling_eigenlines, ruling_fix_lines,
                                  rulings_meet_once)
from pencilforge.groups import PRINTED_SO4, build_group
from pencilforge.linalg import identity
from pencilforge.projective import intersect, line, on_line, point
from pencilforge.scalar import SQRT2, TAU, ZERO


def sizes(name):
    return {c.label: c.size for c in fix_lines(name)}


def test_g6_classes():
    assert sizes("G6") == {"sigma24": 18, "pi3pi3'": 16, "pi3pi3'^2": 16}


def test_g8_classes():
    assert sizes("G8") == {"pi3pi4pi3'pi4'": 72, "pi3pi4sigma4": 36, "sigma2pi3'pi4'": 36,
                           "pi3pi3'": 32, "sigma24": 18}


def test_g8_pair_of_36_classes_is_disjoint():
    by_label = {c.label: c.lines for c in fix_lines("G8")}
    assert not by_label["pi3pi4sigma4"] & by_label["sigma2pi3'pi4'"]


def test_g12_classes():
    assert sizes("G12") == {"sigma24": 450, "pi3pi3'": 200, "pi5pi5'": 72}


def test_pi5_line():
    ln = PRINTED_FIX_LINES["pi5pi5'"][0]
    assert on_line(ln, point(1, 0, 0, 0)) and on_line(ln, point(0, 0, TAU - 1, 1))
    cls = next(c for c in fix_lines("G12") if c.label == "pi5pi5'")
    assert ln in cls.lines


@pytest.mark.parametrize("name", ["G6", "G8", "G12"])
def test_each_class_is_one_line_orbit(name):
    gens = build_group(name).generator_matrices
    for cls in fix_lines(name):
        assert line_orbit(cls.representative_line, gens) == cls.lines


def test_line_orbit_trivial_group():
    ln = PRINTED_FIX_LINES["sigma24"][0]
    assert line_orbit(ln, [identity()]) == {ln}


def test_sigma24_lines_are_skew():
    a, b = PRINTED_FIX_LINES["sigma24"]
    assert line_intersections(a, b) is None


def test_sigma2sigma3_line_meets_pi3pi4sigma4_line():
    a = 1 + SQRT2
    L = line((1, 0, 0, 1), (0, 1, 1, 0))
    hits = [intersect(L, M) for M in PRINTED_FIX_LINES["pi3pi4sigma4"]]
    assert point(1, a, a, 1) in hits


def test_self_intersection_rejected():
    ln = PRINTED_FIX_LINES["sigma24"][0]
    with pytest.raises(ValueError):
        intersect(ln, ln)


@pytest.mark.parametrize("name", ["G6", "G8", "G12"])
def test_real_intersections_off_quadric(name):
    res = class_intersections(name)
    assert res["meeting"] > 0
    assert res["violations"] == []


def test_identity_has_no_fix_lines():
    assert fix_lines_of(identity()) == []


def test_one_sided_lines_lie_in_opposite_rulings():
    left = ruling_eigenlines(PRINTED_SO4["sigma1"], ZERO)
    right = ruling_eigenlines(PRINTED_SO4["sigma3"], ZERO)
    assert len(left) == 2 and len(right) == 2
    assert rulings_meet_once(left, right)


def test_g6_rulings():
    rep = ruling_fix_lines("G6")
    for side in ("left", "right"):
        assert rep[side].all_on_quadric
        assert rep[side].materialized
    assert rulings_meet_once(rep["left"].materialized, rep["right"].materialized)
