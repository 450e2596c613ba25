import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pencilforge.groups import PRINTED_SO4, build_group
from pencilforge.invariants import (act, euler_check, in_span, invariant_basis, is_invariant,
                                    pencil_polynomials, signed_permutation, symmetric_sum, witness_point)
from pencilforge.molien import molien
from pencilforge.poly import MultiPoly, quadric, quadric_power


@pytest.fixture(scope="module")
def polys():
    return pencil_polynomials()


def test_q_is_fixed_by_orthogonal_matrices():
    Q = quadric()
    for m in list(PRINTED_SO4.values()):
        assert act(m, Q) == Q


def test_s6_fixed_by_pi3(polys):
    assert act(PRINTED_SO4["pi3"], polys.S[6]) == polys.S[6]


def test_f_a_is_alternating(polys):
    assert act(PRINTED_SO4["C'"], polys.f_a) == -polys.f_a


def test_s8_fixed_by_reflections(polys):
    assert is_invariant(polys.S[8], [PRINTED_SO4["C"], PRINTED_SO4["C'"]])


def test_conventions_logged(polys):
    meta = polys.metadata
    assert set(meta) == {"S6", "S8", "S12"}
    assert meta["S12"]["sqrt5_sign_flipped"] is False


@pytest.mark.parametrize("name, degree, dim", [("G6", 2, 1), ("G6", 6, 2), ("G12", 12, 2)])
def test_small_dimensions(name, degree, dim):
    assert len(invariant_basis(build_group(name), degree)) == dim


def test_printed_polynomials_in_span(polys):
    assert in_span(polys.S[6], invariant_basis(build_group("G6"), 6))
    assert in_span(polys.S[12], invariant_basis(build_group("G12"), 12))
    assert in_span(quadric_power(6), invariant_basis(build_group("G6"), 6))


@pytest.mark.parametrize("name", ["H", "G6", "G8", "G12"])
def test_dimensions_match_molien(name):
    G = build_group(name)
    series = molien(G, 10).as_ints()
    for d in range(0, 11, 2):
        assert len(invariant_basis(G, d)) == series[d]


@pytest.mark.parametrize("name, degree", [("G6", 6), ("G8", 8), ("H", 4)])
def test_compression_does_not_change_the_space(name, degree):
    G = build_group(name)
    fast = invariant_basis(G, degree)
    slow = invariant_basis(G, degree, compress=False)
    assert fast == slow


def test_sample_values(polys):
    assert polys.S[6].evaluate((1, 0, 0, 0)) == 1
    assert polys.S[8].evaluate((1, 1, 0, 0)) == 16
    assert polys.S[12].evaluate((1, 0, 0, 0)) == 0


def test_witness_point(polys):
    w = witness_point()
    assert not quadric().evaluate(w)
    for S in polys.S.values():
        assert S.evaluate(w)


def test_euler_identity(polys):
    for P in (*polys.S.values(), polys.f_a, quadric()):
        assert euler_check(P)


def test_symmetric_sum_conventions():
    distinct = symmetric_sum((1, 1), "distinct")
    ordered = symmetric_sum((1, 1), "ordered")
    assert ordered == distinct * 2
    with pytest.raises(ValueError):
        symmetric_sum((1,), "other")


def test_signed_permutation():
    perm, signs = signed_permutation(PRINTED_SO4["sigma1"])
    assert perm == (1, 0, 3, 2) and signs == (-1, 1, -1, 1)
    assert signed_permutation(PRINTED_SO4["pi3"]) is None


def test_gradient_of_q():
    assert [g.evaluate((1, 0, 0, 0)) for g in quadric().gradient()] == [2, 0, 0, 0]


def test_poly_arithmetic():
    x = [MultiPoly.variable(i) for i in range(4)]
    P = (x[0] + x[1]) ** 3
    assert P.coefficient((2, 1, 0, 0)) == 3
    assert P.degree == 3 and P.is_homogeneous()
    assert P.derivative(0) == (x[0] + x[1]) ** 2 * 3
    forms = [x[1], x[0], x[2], x[3]]
    assert P.substitute_linear(forms) == P
    assert str(x[0] * 2 - x[1]) == "2*x0 - x1"


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([6, 8]), st.integers(0, 10 ** 6))
def test_s_n_fixed_by_random_group_element(n, k):
    G = build_group({6: "G6", 8: "G8"}[n])
    m = G.matrices[k % G.order]
    assert act(m, pencil_polynomials().S[n]) == pencil_polynomials().S[n]
