import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pencilforge.groups import (PRINTED_PAIRS, PRINTED_SO4, QUATS, build_group, charpoly_identity,
                                extend_by_matrices, orbit, pair, so4_matrix)
from pencilforge.linalg import charpoly, identity, mat_mul
from pencilforge.projective import point


@pytest.mark.parametrize("name, order", [("H", 32), ("G6", 288), ("G8", 1152), ("G12", 7200)])
def test_orders(name, order):
    assert build_group(name).order == order


def test_unknown_group():
    with pytest.raises(ValueError):
        build_group("G7")


@pytest.mark.parametrize("name", sorted(PRINTED_PAIRS))
def test_printed_matrices(name):
    assert so4_matrix(pair(*PRINTED_PAIRS[name])) == PRINTED_SO4[name]


def test_identity_pair():
    assert so4_matrix(pair(None, None)) == identity()


def test_generators_have_printed_orders():
    # q_i^2 = -id in SU(2), p_j^j = -id
    for name, k in (("q1", 2), ("q2", 2), ("q3", 2), ("p3", 3), ("p4", 4), ("p5", 5)):
        q = QUATS[name]
        acc = q
        for _ in range(k - 1):
            acc = acc * q
        assert (-acc).is_identity()


def test_gl4_classes_of_h():
    assert sorted(s for _, s in build_group("H").gl4_classes()) == [1, 1, 12, 18]


def test_gl4_classes_of_g12_contain_sigma24():
    G = build_group("G12")
    s24 = charpoly(mat_mul(PRINTED_SO4["sigma2"], PRINTED_SO4["sigma4"]))
    assert dict(G.gl4_classes())[s24] == 450


@pytest.mark.parametrize("name", ["H", "G6", "G8", "G12"])
def test_classes_partition(name):
    G = build_group(name)
    assert sum(c.size for c in G.conjugacy_classes) == G.order
    assert sum(s for _, s in G.gl4_classes()) == G.order


def test_orbits():
    assert len(orbit(point(1, 1, 1, 1), build_group("G6").generator_matrices)) == 12
    assert len(orbit(point(1, 0, 0, 0), build_group("G12").generator_matrices)) == 60
    assert len(build_group("G6").orbit((1, 2, 3, 5))) == 144


@pytest.mark.parametrize("base, extra, order", [
    ("G6", ("C",), 576), ("G6", ("C", "C'"), 1152), ("G12", ("C",), 14400),
])
def test_extensions(base, extra, order):
    assert extend_by_matrices(build_group(base), [PRINTED_SO4[e] for e in extra]).order == order


def test_extension_rejects_non_orthogonal():
    with pytest.raises(ValueError):
        extend_by_matrices(build_group("H"), [[[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]])


def test_eigenvalue_identity_all_of_g12():
    G = build_group("G12")
    for g, m in zip(G.elements, G.matrices):
        assert charpoly(m) == charpoly_identity(g)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["H", "G6", "G8"]), st.integers(0, 10 ** 6))
def test_orbit_stabilizer(name, k):
    G = build_group(name)
    pts = [(1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 1), (1, 2, 3, 5), (0, 1, 2, 2), (3, 1, -1, 1)]
    pt = pts[k % len(pts)]
    assert len(G.orbit(pt)) * len(G.stabilizer(pt)) == G.order


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 1151), st.integers(0, 1151))
def test_so4_is_a_homomorphism(i, j):
    G = build_group("G8")
    g, h = G.elements[i], G.elements[j]
    assert so4_matrix(g * h) == mat_mul(so4_matrix(g), so4_matrix(h))
