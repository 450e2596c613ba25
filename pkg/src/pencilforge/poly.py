"""Sparse polynomials in x0..x3 with exact coefficients.

Exponent vectors are packed into one int, 8 bits per variable, so monomial
multiplication is integer addition.  Degrees above 255 per variable are not
supported (the largest degree used here is 24).
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .scalar import ONE, ZERO, coerce

__all__ = ["MultiPoly", "pack", "unpack", "monomials", "evaluate_all", "quadric", "quadric_power"]

NVARS = 4
_SHIFT = 8
_MASK = (1 << _SHIFT) - 1


def pack(exps: Sequence[int]) -> int:
    return exps[0] | (exps[1] << 8) | (exps[2] << 16) | (exps[3] << 24)


def unpack(key: int) -> tuple[int, int, int, int]:
    return (key & _MASK, (key >> 8) & _MASK, (key >> 16) & _MASK, (key >> 24) & _MASK)


def monomials(degree: int) -> list[tuple[int, int, int, int]]:
    """All exponent vectors of the given total degree, graded-lex descending."""
    out = []
    for combo in combinations_with_replacement(range(NVARS), degree):
        e = [0] * NVARS
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def _add_into(out: dict, key: int, c) -> None:
    v = out.get(key)
    out[key] = c if v is None else v + c


def _mul_terms(t1: Mapping[int, object], t2: Mapping[int, object]) -> dict:
    out: dict = {}
    get = out.get
    for k1, c1 in t1.items():
        for k2, c2 in t2.items():
            k = k1 + k2
            v = get(k)
            out[k] = c1 * c2 if v is None else v + c1 * c2
    return {k: c for k, c in out.items() if c}


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps packed exponents to nonzero coefficients."""

    __slots__ = ("terms", "_exps")

    def __init__(self, terms: "Mapping[int, object] | None" = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}
        self._exps = None

    @classmethod
    def from_exponents(cls, items: "Mapping[tuple, object] | Iterable[tuple[tuple, object]]") -> "MultiPoly":
        if isinstance(items, Mapping):
            items = items.items()
        out: dict = {}
        for e, c in items:
            _add_into(out, pack(e), coerce(c))
        return cls(out)

    @classmethod
    def variable(cls, i: int) -> "MultiPoly":
        e = [0] * NVARS
        e[i] = 1
        return cls({pack(e): ONE})

    @classmethod
    def constant(cls, c) -> "MultiPoly":
        return cls({0: coerce(c)})

    @classmethod
    def linear_form(cls, coeffs: Sequence) -> "MultiPoly":
        out = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * NVARS
                e[i] = 1
                out[pack(e)] = coerce(c)
        return cls(out)

    # -- inspection --------------------------------------------------------
    def items(self) -> list[tuple[tuple[int, int, int, int], object]]:
        """(exponents, coefficient) pairs in graded-lex descending order."""
        return sorted(((unpack(k), c) for k, c in self.terms.items()),
                      key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def exps(self) -> list:
        if self._exps is None:
            self._exps = [(unpack(k), c) for k, c in self.terms.items()]
        return self._exps

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(pack(exps), ZERO)

    @property
    def degree(self) -> int:
        return max((sum(unpack(k)) for k in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(unpack(k)) for k in self.terms}) <= 1

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(
                f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(e) if a
            )
            cs = c.pretty() if hasattr(c, "pretty") else str(c)
            if " " in cs:
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return MultiPoly(_mul_terms(self.terms, other.terms))
        other = coerce(other)
        if not other:
            return MultiPoly()
        return MultiPoly({k: c * other for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(ONE)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- calculus & evaluation --------------------------------------------
    def derivative(self, i: int) -> "MultiPoly":
        out: dict = {}
        step = 1 << (_SHIFT * i)
        for k, c in self.terms.items():
            a = (k >> (_SHIFT * i)) & _MASK
            if a:
                out[k - step] = c * a
        return MultiPoly(out)

    def gradient(self) -> tuple["MultiPoly", ...]:
        return tuple(self.derivative(i) for i in range(NVARS))

    def evaluate(self, pt: Sequence):
        """Exact value at a point with ExactScalar or ComplexScalar coordinates."""
        deg = max((max(e) for e, _ in self.exps()), default=0)
        pows = []
        for x in pt:
            x = coerce(x)
            row = [None, x]
            for _ in range(2, deg + 1):
                row.append(row[-1] * x)
            pows.append(row)
        acc = None
        for e, c in self.exps():
            v = c
            for i in range(NVARS):
                a = e[i]
                if a:
                    v = v * pows[i][a]
            acc = v if acc is None else acc + v
        if acc is None:
            return coerce(pt[0]) * 0
        return acc

    __call__ = evaluate

    def hessian_polys(self) -> tuple[tuple["MultiPoly", ...], ...]:
        g = self.gradient()
        return tuple(tuple(g[i].derivative(j) for j in range(NVARS)) for i in range(NVARS))

    def hessian(self, pt: Sequence) -> tuple:
        h = self.hessian_polys()
        vals = {}
        for i in range(NVARS):
            for j in range(i, NVARS):
                vals[i, j] = vals[j, i] = h[i][j].evaluate(pt)
        return tuple(tuple(vals[i, j] for j in range(NVARS)) for i in range(NVARS))

    def substitute_linear(self, forms: Sequence["MultiPoly"]) -> "MultiPoly":
        """P(forms[0], ..., forms[3]) for linear forms, with power caching."""
        pow_cache = [[MultiPoly.constant(ONE).terms, f.terms] for f in forms]

        def power(i: int, a: int) -> dict:
            row = pow_cache[i]
            while len(row) <= a:
                row.append(_mul_terms(row[-1], row[1]))
            return row[a]

        pair_cache: dict = {}

        def pair(i: int, a: int, j: int, b: int) -> dict:
            key = (i, a, j, b)
            t = pair_cache.get(key)
            if t is None:
                if not a:
                    t = power(j, b)
                elif not b:
                    t = power(i, a)
                else:
                    t = _mul_terms(power(i, a), power(j, b))
                pair_cache[key] = t
            return t

        out: dict = {}
        for e, c in self.exps():
            left = pair(0, e[0], 1, e[1])
            right = pair(2, e[2], 3, e[3])
            if len(left) == 1 and 0 in left:
                prod = right
            elif len(right) == 1 and 0 in right:
                prod = left
            else:
                prod = _mul_terms(left, right)
            for k, v in prod.items():
                _add_into(out, k, c * v)
        return MultiPoly(out)


def evaluate_all(polys: Sequence[MultiPoly], pt: Sequence) -> list:
    """Values of several polynomials at one point, sharing the power table."""
    deg = max((max(e) for P in polys for e, _ in P.exps()), default=0)
    pows = []
    for x in pt:
        x = coerce(x)
        row = [None, x]
        for _ in range(2, deg + 1):
            row.append(row[-1] * x)
        pows.append(row)
    zero = coerce(pt[0]) * 0
    out = []
    for P in polys:
        acc = zero
        for e, c in P.exps():
            v = c
            for i in range(NVARS):
                a = e[i]
                if a:
                    v = v * pows[i][a]
            acc = acc + v
        out.append(acc)
    return out


def quadric() -> MultiPoly:
    """Q = x0^2 + x1^2 + x2^2 + x3^2."""
    return MultiPoly.from_exponents({(2, 0, 0, 0): 1, (0, 2, 0, 0): 1, (0, 0, 2, 0): 1, (0, 0, 0, 2): 1})


def quadric_power(j: int) -> MultiPoly:
    """Q_j = Q^(j/2) for even j."""
    if j % 2:
        raise ValueError("Q_j needs an even degree")
    return quadric() ** (j // 2)
