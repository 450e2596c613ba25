"""Binary forms f(u, v) of fixed degree, with exact division and gcd.

``coeffs[k]`` is the coefficient of u^k v^(d-k).  Dehomogenizing at v = 1 gives
the univariate polynomial sum coeffs[k] t^k; a root at (1:0) shows up as a
drop in its degree, which is tracked explicitly.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .linalg import rref
from .scalar import coerce

__all__ = ["BinaryForm", "interpolation_matrix", "interpolate"]


def _strip(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _udivmod(a: list, b: list) -> tuple[list, list]:
    """Univariate long division, coefficient lists low -> high, b nonzero."""
    a = list(a)
    b = _strip(list(b))
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    lead_inv = 1 / b[-1]
    zero = b[-1] * 0
    q = [zero] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        if not c:
            continue
        f = c * lead_inv
        q[i] = f
        for j, bj in enumerate(b):
            if bj:
                a[i + j] = a[i + j] - f * bj
    return q, _strip(a[: len(b) - 1])


def _ugcd(a: list, b: list) -> list:
    a, b = _strip(list(a)), _strip(list(b))
    while b:
        _, r = _udivmod(a, b)
        a, b = b, r
    if not a:
        return a
    inv = 1 / a[-1]
    return [x * inv for x in a]


class BinaryForm:
    __slots__ = ("coeffs", "degree")

    def __init__(self, coeffs: Sequence, degree: "int | None" = None):
        coeffs = [coerce(c) for c in coeffs]
        if degree is None:
            degree = len(coeffs) - 1
        if len(coeffs) > degree + 1:
            if any(coeffs[degree + 1:]):
                raise ValueError("coefficients beyond the stated degree")
            coeffs = coeffs[: degree + 1]
        zero = coeffs[0] * 0 if coeffs else coerce(0)
        coeffs = coeffs + [zero] * (degree + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.degree = degree

    @classmethod
    def linear_vanishing_at(cls, u0, v0) -> "BinaryForm":
        """v0*u - u0*v, whose root is (u0 : v0)."""
        u0, v0 = coerce(u0), coerce(v0)
        return cls([-u0, v0], 1)

    def __repr__(self) -> str:
        return f"BinaryForm({[str(c) for c in self.coeffs]}, degree={self.degree})"

    def __str__(self) -> str:
        parts = []
        d = self.degree
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "*".join(x for x in (
                ("u" if k == 1 else f"u^{k}") if k else "",
                ("v" if d - k == 1 else f"v^{d - k}") if d - k else "",
            ) if x)
            cs = c.pretty() if hasattr(c, "pretty") else str(c)
            parts.append(f"({cs})*{mono}" if mono else f"({cs})")
        return " + ".join(parts) or "0"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.degree, self.coeffs))

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)], self.degree)

    def __neg__(self) -> "BinaryForm":
        return BinaryForm([-a for a in self.coeffs], self.degree)

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + (-other)

    def __mul__(self, other) -> "BinaryForm":
        if isinstance(other, BinaryForm):
            zero = self.coeffs[0] * 0
            out = [zero] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
            return BinaryForm(out, self.degree + other.degree)
        other = coerce(other)
        return BinaryForm([a * other for a in self.coeffs], self.degree)

    __rmul__ = __mul__

    def du(self) -> "BinaryForm":
        if self.degree == 0:
            return BinaryForm([self.coeffs[0] * 0], 0)
        return BinaryForm([self.coeffs[k] * k for k in range(1, self.degree + 1)], self.degree - 1)

    def dv(self) -> "BinaryForm":
        if self.degree == 0:
            return BinaryForm([self.coeffs[0] * 0], 0)
        d = self.degree
        return BinaryForm([self.coeffs[k] * (d - k) for k in range(d)], d - 1)

    def __call__(self, u, v):
        acc = None
        for k, c in enumerate(self.coeffs):
            term = c * (u ** k) * (v ** (self.degree - k))
            acc = term if acc is None else acc + term
        return acc

    # -- factor bookkeeping -------------------------------------------------
    def v_multiplicity(self) -> int:
        """Multiplicity of the root (1:0), i.e. of the factor v."""
        m = 0
        for c in reversed(self.coeffs):
            if c:
                break
            m += 1
        return m

    def _split(self) -> tuple[int, list]:
        m = self.v_multiplicity()
        return m, list(self.coeffs[: self.degree - m + 1])

    def num_roots(self) -> int:
        """Number of roots in P1 with multiplicity (= degree unless zero)."""
        return self.degree

    def divmod_exact(self, g: "BinaryForm") -> "tuple[BinaryForm, bool]":
        """(quotient, exact?) for division by g."""
        if g.is_zero():
            raise ZeroDivisionError("division by the zero form")
        if self.is_zero():
            return BinaryForm([self.coeffs[0]], max(self.degree - g.degree, 0)), True
        mf, fu = self._split()
        mg, gu = g._split()
        if mf < mg or self.degree < g.degree:
            return self, False
        q, r = _udivmod(fu, gu)
        if r:
            return self, False
        out = BinaryForm(q, self.degree - g.degree) if q else None
        if out is None:
            return self, False
        return out, True

    def divide_out(self, g: "BinaryForm") -> "tuple[BinaryForm, int]":
        """Remove the highest power of g dividing self; returns (cofactor, power)."""
        f, k = self, 0
        while f.degree >= g.degree and g.degree > 0:
            q, ok = f.divmod_exact(g)
            if not ok:
                break
            f, k = q, k + 1
        return f, k

    def gcd(self, other: "BinaryForm") -> "BinaryForm":
        """Monic-normalized gcd (the zero form is the identity)."""
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        mf, fu = self._split()
        mg, gu = other._split()
        h = _ugcd(fu, gu)
        m = min(mf, mg)
        return BinaryForm(h, len(h) - 1 + m)

    def is_squarefree(self) -> bool:
        return self.du().gcd(self.dv()).degree == 0


@lru_cache(maxsize=None)
def interpolation_matrix(d: int) -> tuple:
    """Inverse Vandermonde matrix for the nodes t = 0..d (rational entries)."""
    n = d + 1
    aug = [[coerce(k ** j) for j in range(n)] + [coerce(int(i == k)) for i in range(n)] for k in range(n)]
    red, _ = rref(aug)
    return tuple(tuple(row[n:]) for row in red)


def interpolate(values: Sequence) -> list:
    """Coefficients c_j with sum c_j k^j = values[k] for k = 0..d."""
    inv = interpolation_matrix(len(values) - 1)
    out = []
    for row in inv:
        acc = None
        for w, y in zip(row, values):
            if w and y:
                term = y * w
                acc = term if acc is None else acc + term
        out.append(acc if acc is not None else values[0] * 0)
    return out
