from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import exact
from pencilforge.groups import PRINTED_SO4, build_group
from pencilforge.linalg import UniPoly, charpoly, det, identity, kernel, mat_add, mat_mul, mat_sub, rank, rref, transpose
from pencilforge.scalar import coerce

SIGMA24 = mat_mul(PRINTED_SO4["sigma2"], PRINTED_SO4["sigma4"])


def up(*coeffs):
    return UniPoly([coerce(c) for c in coeffs])


def test_charpoly_identity():
    assert charpoly(identity()) == up(1, -4, 6, -4, 1)


def test_charpoly_sigma24():
    assert charpoly(SIGMA24) == up(1, 0, -2, 0, 1)


def test_charpoly_pi3():
    # isoclinic: eigenvalues exp(+-i pi/3), each twice, so (t^2 - t + 1)^2
    assert charpoly(PRINTED_SO4["pi3"]) == up(1, -2, 3, -2, 1)
    assert charpoly(PRINTED_SO4["pi3"]) == up(1, -1, 1) * up(1, -1, 1)


def test_kernel_examples():
    assert kernel(identity()) == []
    plus = kernel(mat_sub(SIGMA24, identity()))
    minus = kernel(mat_add(SIGMA24, identity()))
    assert sorted(plus) == sorted([(1, 0, 0, 0), (0, 0, 1, 0)])
    assert sorted(minus) == sorted([(0, 1, 0, 0), (0, 0, 0, 1)])


def test_rank_examples():
    assert rank(identity()) == 4
    assert rank([[0] * 4 for _ in range(4)]) == 0


def test_det_of_reflections():
    assert det(PRINTED_SO4["C"]) == -1
    assert det(PRINTED_SO4["pi5"]) == 1


def test_rref_is_reduced():
    red, piv = rref([[2, 4, 6], [1, 2, 4]])
    assert piv == [0, 2]
    assert red[0][0] == 1 and red[1][2] == 1


matrices = st.lists(st.lists(exact, min_size=4, max_size=4), min_size=4, max_size=4)


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_rank_nullity(m):
    assert rank(m) + len(kernel(m)) == 4


@settings(max_examples=40, deadline=None)
@given(matrices, st.integers(0, 287))
def test_charpoly_conjugation_invariant(m, k):
    g = build_group("G6").matrices[k]
    conj = mat_mul(mat_mul(g, m), transpose(g))
    assert charpoly(conj) == charpoly(m)


@settings(max_examples=40, deadline=None)
@given(matrices, matrices)
def test_det_multiplicative(a, b):
    assert det(mat_mul(a, b)) == det(a) * det(b)
