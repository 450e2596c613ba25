"""Exact arithmetic in the real quartic field Q(sqrt2, sqrt5) and its complexification.

An :class:`ExactScalar` stores ``(a + b*r2 + c*r5 + d*r10) / den`` with integer
numerators and a positive common denominator, normalized so that the five
integers are coprime.  That makes equality and hashing structural.

Rationals are plain :class:`fractions.Fraction` values; both ``int`` and
``Fraction`` mix freely with :class:`ExactScalar` in arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "ExactScalar",
    "ComplexScalar",
    "ZERO",
    "ONE",
    "SQRT2",
    "SQRT5",
    "SQRT10",
    "TAU",
    "I",
    "as_exact",
    "coerce",
    "parse_exact",
]


class ExactScalar:
    """Element of Q(sqrt2, sqrt5), immutable."""

    __slots__ = ("a", "b", "c", "d", "den", "_hash")

    def __init__(self, a=0, b=0, c=0, d=0, den=1):
        # Fast path for already-normalized integer input.
        if den == 1 and type(a) is int and type(b) is int and type(c) is int and type(d) is int:
            self.a, self.b, self.c, self.d, self.den = a, b, c, d, 1
            self._hash = None
            return
        fa, fb, fc, fd, fden = (Fraction(v) for v in (a, b, c, d, den))
        if fden == 0:
            raise ZeroDivisionError("zero denominator")
        fa, fb, fc, fd = fa / fden, fb / fden, fc / fden, fd / fden
        common = math.lcm(fa.denominator, fb.denominator, fc.denominator, fd.denominator)
        self.a = fa.numerator * (common // fa.denominator)
        self.b = fb.numerator * (common // fb.denominator)
        self.c = fc.numerator * (common // fc.denominator)
        self.d = fd.numerator * (common // fd.denominator)
        self.den = common
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, c: int, d: int, den: int) -> "ExactScalar":
        """Build from integers, normalizing sign and common factors."""
        if den < 0:
            a, b, c, d, den = -a, -b, -c, -d, -den
        if den != 1:
            g = math.gcd(a, b, c, d, den)
            if g != 1:
                a, b, c, d, den = a // g, b // g, c // g, d // g, den // g
        obj = object.__new__(cls)
        obj.a, obj.b, obj.c, obj.d, obj.den = a, b, c, d, den
        obj._hash = None
        return obj

    # -- components -------------------------------------------------------
    @property
    def c1(self) -> Fraction:
        return Fraction(self.a, self.den)

    @property
    def c2(self) -> Fraction:
        return Fraction(self.b, self.den)

    @property
    def c5(self) -> Fraction:
        return Fraction(self.c, self.den)

    @property
    def c10(self) -> Fraction:
        return Fraction(self.d, self.den)

    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c1, self.c2, self.c5, self.c10)

    def is_rational(self) -> bool:
        return self.b == 0 and self.c == 0 and self.d == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.a, self.den)

    # -- protocol ---------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.a or self.b or self.c or self.d)

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactScalar):
            return (
                self.a == other.a and self.b == other.b and self.c == other.c
                and self.d == other.d and self.den == other.den
            )
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.c == 0 and self.d == 0 and Fraction(self.a, self.den) == other
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            if self.is_rational():
                h = hash(Fraction(self.a, self.den))
            else:
                h = hash((self.a, self.b, self.c, self.d, self.den))
            self._hash = h
        return h

    def __repr__(self) -> str:
        return f"ExactScalar({self})"

    def __str__(self) -> str:
        return " + ".join(
            f"{coef}{suffix}"
            for coef, suffix in zip(self.components(), ("", "*r2", "*r5", "*r10"))
        )

    def pretty(self) -> str:
        """Short human form, dropping zero components."""
        parts = []
        for coef, suffix in zip(self.components(), ("", "*r2", "*r5", "*r10")):
            if coef:
                parts.append(f"{coef}{suffix}" if suffix else f"{coef}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    # -- arithmetic -------------------------------------------------------
    def __neg__(self) -> "ExactScalar":
        return ExactScalar._raw(-self.a, -self.b, -self.c, -self.d, self.den)

    def __pos__(self) -> "ExactScalar":
        return self

    def __add__(self, other) -> "ExactScalar":
        if not isinstance(other, ExactScalar):
            other = as_exact(other)
            if other is None:
                return NotImplemented
        d1, d2 = self.den, other.den
        if d1 == d2:
            return ExactScalar._raw(self.a + other.a, self.b + other.b, self.c + other.c,
                                    self.d + other.d, d1)
        return ExactScalar._raw(
            self.a * d2 + other.a * d1, self.b * d2 + other.b * d1,
            self.c * d2 + other.c * d1, self.d * d2 + other.d * d1, d1 * d2,
        )

    __radd__ = __add__

    def __sub__(self, other) -> "ExactScalar":
        if not isinstance(other, ExactScalar):
            other = as_exact(other)
            if other is None:
                return NotImplemented
        d1, d2 = self.den, other.den
        if d1 == d2:
            return ExactScalar._raw(self.a - other.a, self.b - other.b, self.c - other.c,
                                    self.d - other.d, d1)
        return ExactScalar._raw(
            self.a * d2 - other.a * d1, self.b * d2 - other.b * d1,
            self.c * d2 - other.c * d1, self.d * d2 - other.d * d1, d1 * d2,
        )

    def __rsub__(self, other) -> "ExactScalar":
        other = as_exact(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "ExactScalar":
        if not isinstance(other, ExactScalar):
            if type(other) is int:
                return ExactScalar._raw(self.a * other, self.b * other, self.c * other,
                                        self.d * other, self.den)
            other = as_exact(other)
            if other is None:
                return NotImplemented
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        if not (b2 or c2 or d2):
            return ExactScalar._raw(a1 * a2, b1 * a2, c1 * a2, d1 * a2, self.den * other.den)
        if not (b1 or c1 or d1):
            return ExactScalar._raw(a1 * a2, a1 * b2, a1 * c2, a1 * d2, self.den * other.den)
        # r2*r5 = r10, r2*r10 = 2 r5, r5*r10 = 5 r2
        return ExactScalar._raw(
            a1 * a2 + 2 * b1 * b2 + 5 * c1 * c2 + 10 * d1 * d2,
            a1 * b2 + b1 * a2 + 5 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
            self.den * other.den,
        )

    __rmul__ = __mul__

    def conjugates(self) -> tuple["ExactScalar", "ExactScalar", "ExactScalar"]:
        """Images under r2 -> -r2, r5 -> -r5, and both."""
        a, b, c, d, n = self.a, self.b, self.c, self.d, self.den
        return (
            ExactScalar._raw(a, -b, c, -d, n),
            ExactScalar._raw(a, b, -c, -d, n),
            ExactScalar._raw(a, -b, -c, d, n),
        )

    def norm(self) -> Fraction:
        """Field norm down to Q (product of the four embeddings)."""
        s2, s5, s25 = self.conjugates()
        return (self * s2 * s5 * s25).to_fraction()

    def inverse(self) -> "ExactScalar":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(sqrt2, sqrt5)")
        if self.is_rational():
            return ExactScalar._raw(self.den, 0, 0, 0, self.a)
        s2, s5, s25 = self.conjugates()
        cof = s2 * s5 * s25
        n = self * cof
        # n is rational by Galois invariance
        assert n.is_rational()
        return ExactScalar._raw(cof.a * n.den, cof.b * n.den, cof.c * n.den, cof.d * n.den,
                                cof.den * n.a)

    def __truediv__(self, other) -> "ExactScalar":
        if not isinstance(other, ExactScalar):
            if type(other) is int:
                if other == 0:
                    raise ZeroDivisionError("division by zero in Q(sqrt2, sqrt5)")
                return ExactScalar._raw(self.a, self.b, self.c, self.d, self.den * other)
            other = as_exact(other)
            if other is None:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "ExactScalar":
        other = as_exact(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "ExactScalar":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- real embedding ---------------------------------------------------
    def _interval(self, bits: int) -> tuple[int, int]:
        """Bounds lo <= numerator * 2**bits <= hi for the real embedding."""
        scale = 1 << bits
        lo = hi = self.a * scale
        for coef, rad in ((self.b, 2), (self.c, 5), (self.d, 10)):
            if not coef:
                continue
            f = math.isqrt(rad << (2 * bits))  # floor(sqrt(rad) * 2**bits)
            if coef > 0:
                lo += coef * f
                hi += coef * (f + 1)
            else:
                lo += coef * (f + 1)
                hi += coef * f
        return lo, hi

    def sign(self) -> int:
        if not (self.b or self.c or self.d):
            return (self.a > 0) - (self.a < 0)
        if not self:
            return 0
        bits = 64
        while True:
            lo, hi = self._interval(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def __float__(self) -> float:
        if self.is_rational():
            return self.a / self.den
        size = max(abs(self.a), abs(self.b), abs(self.c), abs(self.d), 1).bit_length()
        bits = 80 + size
        while True:
            lo, hi = self._interval(bits)
            # width must sit 60 bits below the magnitude for a correctly rounded double
            if lo and hi and (lo > 0) == (hi > 0) and (hi - lo) << 60 < min(abs(lo), abs(hi)):
                return float(Fraction(lo + hi, 2 * self.den << bits))
            bits *= 2

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - other).sign() >= 0

    def __abs__(self) -> "ExactScalar":
        return -self if self.sign() < 0 else self

    # -- square roots of simple elements ----------------------------------
    def try_sqrt(self) -> "ExactScalar | None":
        """Exact square root when self is r * (rational square) with r in {1,2,5,10}."""
        if not self.is_rational() or self.sign() < 0:
            return None
        q = self.to_fraction()
        if q == 0:
            return ZERO
        for rad, basis in ((1, ONE), (2, SQRT2), (5, SQRT5), (10, SQRT10)):
            t = q / rad
            n, d = t.numerator, t.denominator
            rn, rd = math.isqrt(n), math.isqrt(d)
            if rn * rn == n and rd * rd == d:
                return basis * Fraction(rn, rd)
        return None


def as_exact(value) -> "ExactScalar | None":
    if isinstance(value, ExactScalar):
        return value
    if type(value) is int:
        return ExactScalar._raw(value, 0, 0, 0, 1)
    if isinstance(value, Fraction):
        return ExactScalar._raw(value.numerator, 0, 0, 0, value.denominator)
    if isinstance(value, int):  # bool and int subclasses
        return ExactScalar._raw(int(value), 0, 0, 0, 1)
    return None


def coerce(value):
    """ExactScalar/ComplexScalar pass through; int and Fraction become ExactScalar."""
    if isinstance(value, (ExactScalar, ComplexScalar)):
        return value
    ex = as_exact(value)
    if ex is None:
        raise TypeError(f"cannot use {value!r} as an exact scalar")
    return ex


def parse_exact(text: str) -> ExactScalar:
    """Inverse of ``str(ExactScalar)``; also accepts a bare rational like ``-22/243``."""
    text = text.strip()
    if "r" not in text:
        return as_exact(Fraction(text))
    comps = {"": Fraction(0), "r2": Fraction(0), "r5": Fraction(0), "r10": Fraction(0)}
    for part in text.replace("- ", "+ -").split("+"):
        part = part.strip()
        if not part:
            continue
        if "*" in part:
            coef, rad = part.split("*")
            comps[rad.strip()] += Fraction(coef.strip())
        else:
            comps[""] += Fraction(part)
    return ExactScalar(comps[""], comps["r2"], comps["r5"], comps["r10"])


class ComplexScalar:
    """``re + i*im`` with parts in Q(sqrt2, sqrt5)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, ExactScalar) else as_exact(re)
        self.im = im if isinstance(im, ExactScalar) else as_exact(im)

    @staticmethod
    def _coerce(value) -> "ComplexScalar | None":
        if isinstance(value, ComplexScalar):
            return value
        ex = as_exact(value)
        if ex is None:
            return None
        return ComplexScalar(ex, ZERO)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        other = ComplexScalar._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"ComplexScalar({self.re.pretty()}, {self.im.pretty()})"

    def is_real(self) -> bool:
        return not self.im

    def conj(self) -> "ComplexScalar":
        return ComplexScalar(self.re, -self.im)

    def norm(self) -> ExactScalar:
        return self.re * self.re + self.im * self.im

    def __neg__(self) -> "ComplexScalar":
        return ComplexScalar(-self.re, -self.im)

    def __add__(self, other) -> "ComplexScalar":
        other = ComplexScalar._coerce(other)
        if other is None:
            return NotImplemented
        return ComplexScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "ComplexScalar":
        other = ComplexScalar._coerce(other)
        if other is None:
            return NotImplemented
        return ComplexScalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "ComplexScalar":
        other = ComplexScalar._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "ComplexScalar":
        if not isinstance(other, ComplexScalar):
            ex = as_exact(other)
            if ex is None:
                return NotImplemented
            return ComplexScalar(self.re * ex, self.im * ex)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            return ComplexScalar(a * c, a * d)
        if not d:
            return ComplexScalar(a * c, b * c)
        return ComplexScalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "ComplexScalar":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero complex scalar")
        inv = n.inverse()
        return ComplexScalar(self.re * inv, -self.im * inv)

    def __truediv__(self, other) -> "ComplexScalar":
        other = ComplexScalar._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "ComplexScalar":
        other = ComplexScalar._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "ComplexScalar":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ComplexScalar(ONE, ZERO), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
SQRT2 = ExactScalar(0, 1)
SQRT5 = ExactScalar(0, 0, 1)
SQRT10 = ExactScalar(0, 0, 0, 1)
TAU = ExactScalar(Fraction(1, 2), 0, Fraction(1, 2))
I = ComplexScalar(ZERO, ONE)
