from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pencilforge.binary import BinaryForm
from pencilforge.fixlines import PRINTED_FIX_LINES, fix_lines
from pencilforge.pencil import (PencilMember, audit_all_lines, base_locus, bound_report, build_pencil,
                                certify_node, configurations, member_through, restrict_to_line, seed_points,
                                singular_orbits)
from pencilforge.poly import quadric
from pencilforge.projective import line, point, transform_point
from pencilforge.scalar import TAU, ComplexScalar
from pencilforge.verify import pencil_results

F = Fraction
TABLE = {
    6: {F(-1): 12, F(-2, 3): 48, F(-7, 12): 48, F(-1, 4): 12},
    8: {F(-1): 24, F(-3, 4): 72, F(-9, 16): 144, F(-5, 9): 96},
    12: {F(-3, 32): 300, F(-22, 243): 600, F(-2, 25): 360, F(0): 60},
}


@pytest.fixture(scope="module", params=[6, 8, 12])
def results(request):
    p = build_pencil(request.param)
    return p, singular_orbits(p)


@pytest.mark.parametrize("n, pt, lam", [
    (6, (1, 0, 0, 0), F(-1)),
    (6, (1, 0, 1, 0), F(-1, 4)),
    (12, (1, 0, 0, 0), F(0)),
    (12, (1, 1, 0, 0), F(-3, 32)),
    (12, (0, TAU * TAU, 1, 0), F(-22, 243)),
])
def test_member_through(n, pt, lam):
    assert member_through(build_pencil(n), point(*pt)).lam == lam


def test_member_through_rejects_quadric():
    w = (ComplexScalar(0, 1), ComplexScalar(1), ComplexScalar(0), ComplexScalar(0))
    with pytest.raises(ValueError):
        member_through(build_pencil(6), w)


def test_family_three_on_f8():
    lams = {member_through(build_pencil(8), pt).lam for pt, tag in seed_points(8) if "(3)" in tag}
    assert lams == {F(-9, 16)}


def test_singular_table(results):
    pencil, orbits = results
    assert {r.lam.to_fraction(): r.orbit_size for r in orbits} == TABLE[pencil.n]
    for r in orbits:
        assert r.lam.is_rational()
        assert r.gradient_checked == r.orbit_size
        assert r.hessian_rank == 3 and r.is_node
        assert r.spot_checks and all(k == 3 for k in r.spot_checks)


def test_members_sorted(results):
    _, orbits = results
    lams = [r.lam for r in orbits]
    assert lams == sorted(lams)


def test_node_at_vertex_of_f6():
    p = build_pencil(6)
    cert = certify_node(p, PencilMember.from_lambda(-1), point(1, 0, 0, 0))
    assert cert["is_node"] and cert["hessian_rank"] == 3


def test_generic_point_is_smooth():
    p = build_pencil(12)
    pt = point(1, 2, 3, 5)
    assert any(p.gradient_at(member_through(p, pt), pt))


def test_multiple_quadric_has_no_lambda():
    m = PencilMember.make(0, 3)
    assert m.is_multiple_quadric and m.label() == "Q^(n/2)"
    with pytest.raises(ValueError):
        m.lam
    with pytest.raises(ValueError):
        PencilMember.make(0, 0)


def test_restrictions_to_sigma24_line():
    L = line((1, 0, 0, 0), (0, 0, 1, 0))
    assert restrict_to_line(quadric(), L) == BinaryForm([1, 0, 1], 2)
    assert restrict_to_line(build_pencil(6).S, L) == BinaryForm([1, 0, 0, 0, 0, 0, 1], 6)


def test_restriction_to_line_in_zero_set():
    L = line((1, 0, 0, 0), (0, 1, 0, 0))
    x0, x1 = quadric().variable(2), quadric().variable(3)
    assert restrict_to_line(x0 * x1, L).is_zero()


def test_audits_complete(results):
    pencil, orbits = results
    audits = audit_all_lines(pencil, orbits)
    assert audits and all(a.ok and a.remainder_degree == 0 for a in audits)


def test_base_locus_meets_only_expected_classes(results):
    pencil, orbits = results
    meets = {a.label for a in audit_all_lines(pencil, orbits) if a.meets_base_locus}
    assert meets == {6: {"sigma24"}, 8: {"pi3pi3'"}, 12: {"pi5pi5'"}}[pencil.n]


@pytest.mark.parametrize("n", [6, 8, 12])
def test_base_locus(n):
    b = base_locus(n)
    assert b["v"]["gcd_degree"] == n and b["w"]["gcd_degree"] == n
    assert b["total_lines"] == 2 * n and b["reduced"] and b["ok"]


@pytest.mark.parametrize("label, n, lam, row", [
    ("sigma24", 12, F(0), (450, 2, 60, 15)),
    ("pi3pi3'", 6, F(-1), (16, 3, 12, 4)),
    ("pi5pi5'", 12, F(-2, 25), (72, 5, 360, 1)),
])
def test_configuration_examples(label, n, lam, row):
    p = build_pencil(n)
    confs = configurations(p, singular_orbits(p))
    got = {(c.label, c.member.lam): (c.lines, c.points_per_line, c.points, c.lines_per_point) for c in confs}
    assert got[(label, lam)] == row
    assert all(c.balanced for c in confs)


@pytest.mark.parametrize("n, bound, generic", [(6, 75, 144), (8, 196, 576), (12, 726, 3600)])
def test_bounds(n, bound, generic):
    b = bound_report(n)
    assert (b["naive_bound"], b["generic_orbit"], b["generic_orbit_computed"]) == (bound, generic, generic)


def test_mu12_context():
    assert bound_report(12, verify_generic=False)["context"] == "600 ≤ μ(12) ≤ 645"


def test_printed_pi5_line_in_g12_class():
    cls = next(c for c in fix_lines("G12") if c.label == "pi5pi5'")
    assert PRINTED_FIX_LINES["pi5pi5'"][0] in cls.lines


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([6, 8, 12]), st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
def test_singular_sets_are_group_stable(n, i, j):
    p, orbits = pencil_results(n)
    r = orbits[i % len(orbits)]
    m = p.group.matrices[j % p.group.order]
    pts = set(r.points)
    q = transform_point(m, r.points[i % len(r.points)])
    assert q in pts
    assert member_through(p, q) == r.member
