from fractions import Fraction

import pytest
from hypothesis import given

from conftest import complex_exact, exact, nonzero_exact
from pencilforge.scalar import (I, ONE, SQRT2, SQRT5, SQRT10, TAU, ZERO, ComplexScalar, ExactScalar,
                                coerce, parse_exact)


def test_tau_squared():
    assert TAU * TAU == TAU + 1
    assert (TAU * TAU).components() == (Fraction(3, 2), 0, Fraction(1, 2), 0)


def test_basis_products():
    assert SQRT2 * SQRT5 == SQRT10
    assert SQRT10 * SQRT10 == 10
    assert 1 / SQRT2 == SQRT2 / 2


@pytest.mark.parametrize("x, inv", [
    (TAU, TAU - 1),
    (SQRT10, SQRT10 / 10),
    (1 + SQRT2, SQRT2 - 1),
])
def test_inverse(x, inv):
    assert x.inverse() == inv
    assert x * inv == 1


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_sign():
    assert ZERO.sign() == 0
    assert (TAU - 1).sign() == 1
    assert (3 - SQRT10).sign() == -1
    # close call: 99 - 70*sqrt2 is about 0.00505
    assert (99 - 70 * SQRT2).sign() == 1


def test_float():
    assert float(TAU) == pytest.approx(1.6180339887, abs=1e-10)
    assert float(SQRT2 / 2) == pytest.approx(0.7071067811, abs=1e-10)
    assert float(coerce(Fraction(-22, 243))) == pytest.approx(-0.0905349794, abs=1e-10)


def test_parse_roundtrip():
    x = ExactScalar(Fraction(1, 3), -2, Fraction(5, 7), 1)
    assert parse_exact(str(x)) == x
    assert parse_exact("-22/243") == Fraction(-22, 243)


def test_complex_basics():
    assert I * I == -1
    z = ComplexScalar(1, SQRT2)
    assert z * z.conj() == 3
    assert (z / z) == 1


def test_try_sqrt():
    assert coerce(8).try_sqrt() == 2 * SQRT2
    assert coerce(Fraction(5, 4)).try_sqrt() == SQRT5 / 2
    assert coerce(3).try_sqrt() is None


@given(exact, exact, exact)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(nonzero_exact)
def test_field_inverse(a):
    assert a * a.inverse() == 1


@given(exact, exact)
def test_sign_multiplicative(a, b):
    assert (a * b).sign() == a.sign() * b.sign()


@given(exact, exact)
def test_order_agrees_with_float(a, b):
    if abs(float(a) - float(b)) > 1e-9:
        assert (a < b) == (float(a) < float(b))


@given(complex_exact, complex_exact)
def test_complex_norm_multiplicative(z, w):
    assert (z * w).norm() == z.norm() * w.norm()


@given(exact)
def test_parse_inverts_str(a):
    assert parse_exact(str(a)) == a
