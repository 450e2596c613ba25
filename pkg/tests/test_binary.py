from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pencilforge.binary import BinaryForm, interpolate
from pencilforge.scalar import coerce

ints = st.integers(-6, 6)
forms = st.lists(ints, min_size=1, max_size=5).map(lambda c: BinaryForm(c, len(c) - 1))


def lin(u0, v0):
    return BinaryForm.linear_vanishing_at(u0, v0)


def test_linear_root():
    f = lin(2, 3)
    assert f(2, 3) == 0
    assert lin(1, 0).v_multiplicity() == 1


def test_divide_out_counts_powers():
    f = lin(1, 1) * lin(1, 1) * lin(2, 1) * lin(1, 0)
    rest, k = f.divide_out(lin(1, 1))
    assert k == 2 and rest == lin(2, 1) * lin(1, 0)
    rest, k = rest.divide_out(lin(1, 0))
    assert k == 1 and rest.degree == 1


def test_inexact_division():
    _, ok = lin(1, 1).divmod_exact(lin(2, 1))
    assert not ok


def test_gcd_and_squarefree():
    a = lin(1, 1) * lin(2, 1)
    b = lin(1, 1) * lin(1, 0)
    assert a.gcd(b).degree == 1
    assert a.is_squarefree()
    assert not (a * lin(2, 1)).is_squarefree()
    assert (lin(1, 0) * lin(1, 0)).is_squarefree() is False


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        lin(1, 1).divmod_exact(BinaryForm([0, 0], 1))


def test_derivatives():
    f = BinaryForm([1, 2, 3], 2)  # v^2 + 2uv + 3u^2
    assert f.du() == BinaryForm([2, 6], 1)
    assert f.dv() == BinaryForm([2, 2], 1)


def test_interpolate():
    vals = [coerce(k * k - 3 * k + Fraction(1, 2)) for k in range(4)]
    assert interpolate(vals) == [Fraction(1, 2), -3, 1, 0]


@settings(max_examples=60, deadline=None)
@given(forms, forms)
def test_product_divides(f, g):
    if g.is_zero() or f.is_zero():
        return
    q, ok = (f * g).divmod_exact(g)
    assert ok and q * g == f * g


@settings(max_examples=60, deadline=None)
@given(forms, forms)
def test_euler_for_forms(f, g):
    # u f_u + v f_v = d f, checked at a sample point
    u, v = coerce(3), coerce(-2)
    if f.degree:
        assert f.du()(u, v) * u + f.dv()(u, v) * v == f(u, v) * f.degree


@settings(max_examples=60, deadline=None)
@given(forms, forms)
def test_gcd_divides_both(f, g):
    h = f.gcd(g)
    if h.is_zero():
        return
    for x in (f, g):
        if not x.is_zero():
            assert x.divmod_exact(h)[1]
