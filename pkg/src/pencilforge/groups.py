"""Bi-polyhedral groups H, G6, G8, G12 in SO(4) built from pairs of unit quaternions.

A pair (p, q) acts on R^4 = H (basis 1, i, j, k) by ``x -> p * x * conj(q)``;
(p, q) and (-p, -q) give the same rotation.  The SU(2) generators are taken
verbatim as 2x2 complex matrices and translated to quaternions through
``[[a, b], [-conj(b), conj(a)]] <-> Re(a) + Im(a) i + Re(b) j + Im(b) k``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import linalg
from .linalg import Matrix, UniPoly, charpoly, identity, mat_mul, transpose
from .projective import ProjPoint, point, transform_point
from .scalar import ONE, SQRT2, TAU, ZERO, ComplexScalar, ExactScalar, coerce

GROUP_NAMES = ("H", "G6", "G8", "G12")
GROUP_ORDERS = {"H": 32, "G6": 288, "G8": 1152, "G12": 7200}
DEGREES = {"G6": 6, "G8": 8, "G12": 12}


@dataclass(frozen=True)
class Quaternion:
    w: ExactScalar
    x: ExactScalar
    y: ExactScalar
    z: ExactScalar

    def __mul__(self, o: "Quaternion") -> "Quaternion":
        a1, b1, c1, d1 = self.w, self.x, self.y, self.z
        a2, b2, c2, d2 = o.w, o.x, o.y, o.z
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> ExactScalar:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def components(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    def is_positive(self) -> bool:
        """First nonzero coefficient is positive."""
        for c in self.components():
            if c:
                return c.sign() > 0
        return False

    def is_identity(self) -> bool:
        return self.w == 1 and not (self.x or self.y or self.z)

    @classmethod
    def from_su2(cls, m: Sequence[Sequence[ComplexScalar]]) -> "Quaternion":
        (a, b), (c, d) = m
        if c != -b.conj() or d != a.conj():
            raise ValueError("matrix is not of the form [[a, b], [-conj(b), conj(a)]]")
        return cls(a.re, a.im, b.re, b.im)

    def to_su2(self) -> tuple:
        a = ComplexScalar(self.w, self.x)
        b = ComplexScalar(self.y, self.z)
        return ((a, b), (-b.conj(), a.conj()))


QUNIT = Quaternion(ONE, ZERO, ZERO, ZERO)


def _c(re, im=0) -> ComplexScalar:
    return ComplexScalar(coerce(re), coerce(im))


half = Fraction(1, 2)

# SU(2) matrices exactly as printed.
SU2_PRINTED = {
    "q1": ((_c(0, 1), _c(0)), (_c(0), _c(0, -1))),
    "q2": ((_c(0), _c(1)), (_c(-1), _c(0))),
    "q3": ((_c(0), _c(0, 1)), (_c(0, 1), _c(0))),
    "p3": ((_c(half, half), _c(-half, half)), (_c(half, half), _c(half, -half))),
    "p4": ((_c(SQRT2 * half, SQRT2 * half), _c(0)), (_c(0), _c(SQRT2 * half, -SQRT2 * half))),
    "p5": ((_c(TAU * half), _c((TAU - 1) * half, half)),
           (_c((1 - TAU) * half, half), _c(TAU * half))),
}

QUATS = {name: Quaternion.from_su2(m) for name, m in SU2_PRINTED.items()}


def _m(rows, scale=1) -> Matrix:
    return tuple(tuple(coerce(x) * scale for x in r) for r in rows)


_t = TAU
_h = Fraction(1, 2)
_s = SQRT2 * _h  # 1/sqrt2

# 4x4 matrices exactly as printed (sigma_i, pi_j, pi_j', C, C').
PRINTED_SO4 = {
    "sigma1": _m([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]),
    "sigma2": _m([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]),
    "sigma3": _m([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]),
    "sigma4": _m([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]),
    "pi3": _m([[1, -1, 1, -1], [1, 1, -1, -1], [-1, 1, 1, -1], [1, 1, 1, 1]], _h),
    "pi3'": _m([[1, 1, -1, 1], [-1, 1, -1, -1], [1, 1, 1, -1], [-1, 1, 1, 1]], _h),
    "pi4": _m([[1, -1, 0, 0], [1, 1, 0, 0], [0, 0, 1, -1], [0, 0, 1, 1]], _s),
    "pi4'": _m([[1, 1, 0, 0], [-1, 1, 0, 0], [0, 0, 1, -1], [0, 0, 1, 1]], _s),
    "pi5": _m([[_t, 0, 1 - _t, -1], [0, _t, -1, _t - 1], [_t - 1, 1, _t, 0], [1, 1 - _t, 0, _t]], _h),
    "pi5'": _m([[_t, 0, _t - 1, 1], [0, _t, -1, _t - 1], [1 - _t, 1, _t, 0], [-1, 1 - _t, 0, _t]], _h),
    "C": _m([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]),
    "C'": _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
}

# Which quaternion pair each printed SO(4) matrix claims to be.
PRINTED_PAIRS = {
    "sigma1": ("q1", None), "sigma2": ("q2", None),
    "sigma3": (None, "q1"), "sigma4": (None, "q2"),
    "pi3": ("p3", None), "pi3'": (None, "p3"),
    "pi4": ("p4", None), "pi4'": (None, "p4"),
    "pi5": ("p5", None), "pi5'": (None, "p5"),
}

GENERATORS = {
    "H": ("sigma1", "sigma2", "sigma3", "sigma4"),
    "G6": ("sigma1", "sigma2", "sigma3", "sigma4", "pi3", "pi3'"),
    "G8": ("sigma2", "sigma4", "pi3", "pi3'", "pi4", "pi4'"),
    "G12": ("sigma1", "sigma2", "sigma3", "sigma4", "pi5", "pi5'"),
}


@dataclass(frozen=True)
class GroupElement:
    """sigma(p, q), stored with the first nonzero coefficient of p positive."""

    p: Quaternion
    q: Quaternion

    @staticmethod
    def make(p: Quaternion, q: Quaternion) -> "GroupElement":
        if p.is_positive():
            return GroupElement(p, q)
        return GroupElement(-p, -q)

    def __mul__(self, o: "GroupElement") -> "GroupElement":
        return GroupElement.make(self.p * o.p, self.q * o.q)

    def inverse(self) -> "GroupElement":
        return GroupElement.make(self.p.conj(), self.q.conj())

    def is_identity(self) -> bool:
        return self.p.is_identity() and self.q.is_identity()

    def sort_key(self) -> tuple:
        return tuple(_scalar_key(c) for c in self.p.components() + self.q.components())


def _scalar_key(s: ExactScalar) -> tuple:
    return (s.den, s.a, s.b, s.c, s.d)


def pair(left: "str | None", right: "str | None") -> GroupElement:
    p = QUATS[left] if left else QUNIT
    q = QUATS[right] if right else QUNIT
    return GroupElement.make(p, q)


def so4_matrix(g: GroupElement) -> Matrix:
    """Matrix of x -> p x conj(q) on R^4 with basis (1, i, j, k)."""
    return _so4_cached(g)


@lru_cache(maxsize=None)
def _so4_cached(g: GroupElement) -> Matrix:
    qc = g.q.conj()
    basis = (
        QUNIT,
        Quaternion(ZERO, ONE, ZERO, ZERO),
        Quaternion(ZERO, ZERO, ONE, ZERO),
        Quaternion(ZERO, ZERO, ZERO, ONE),
    )
    cols = [(g.p * e * qc).components() for e in basis]
    return transpose(cols)


def charpoly_identity(g: GroupElement) -> UniPoly:
    """Characteristic polynomial predicted from the real parts a, b of p and q."""
    a, b = g.p.w, g.q.w
    ab4 = 4 * a * b
    return UniPoly([ONE, -ab4, 4 * a * a + 4 * b * b - 2, -ab4, ONE])


# ---------------------------------------------------------------------------
# Closure


def quaternion_closure(gens: Iterable[Quaternion]) -> list[Quaternion]:
    gens = list(gens)
    seen = {QUNIT}
    queue = deque([QUNIT])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g * x
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen, key=lambda q: tuple(_scalar_key(c) for c in q.components()))


def closure(gens: Iterable[GroupElement]) -> set[GroupElement]:
    """Breadth-first closure of GroupElements under left multiplication by generators."""
    gens = list(gens)
    ident = GroupElement.make(QUNIT, QUNIT)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g * x
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _quaternion_classes(elements: Sequence[Quaternion], gens: Sequence[Quaternion]) -> list[frozenset]:
    remaining = set(elements)
    classes = []
    for x in elements:
        if x not in remaining:
            continue
        cls = {x}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for g in gens:
                z = g * y * g.conj()
                if z not in cls:
                    cls.add(z)
                    queue.append(z)
        remaining -= cls
        classes.append(frozenset(cls))
    return classes


@dataclass
class ConjugacyClass:
    representative: GroupElement
    elements: frozenset
    charpoly: UniPoly

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass
class FiniteGroup:
    name: str
    generator_names: tuple
    generators: tuple
    elements: list
    left: list = field(repr=False, default_factory=list)
    right: list = field(repr=False, default_factory=list)

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    @cached_property
    def generator_matrices(self) -> tuple:
        return tuple(so4_matrix(g) for g in self.generators)

    @cached_property
    def matrices(self) -> list:
        return [so4_matrix(g) for g in self.elements]

    @cached_property
    def matrix_set(self) -> frozenset:
        return frozenset(self.matrices)

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.element_set

    @cached_property
    def conjugacy_classes(self) -> list[ConjugacyClass]:
        """True classes: images of products of binary-group classes."""
        lgens = [g.p for g in self.generators if not g.p.is_identity()]
        rgens = [g.q for g in self.generators if not g.q.is_identity()]
        lcls = _quaternion_classes(self.left, lgens)
        rcls = _quaternion_classes(self.right, rgens)
        seen = set()
        out = []
        for a in lcls:
            for b in rcls:
                elems = frozenset(GroupElement.make(p, q) for p in a for q in b)
                if elems in seen:
                    continue
                seen.add(elems)
                rep = min(elems, key=GroupElement.sort_key)
                out.append(ConjugacyClass(rep, elems, charpoly(so4_matrix(rep))))
        out.sort(key=lambda c: (c.size, c.representative.sort_key()))
        return out

    @cached_property
    def class_of(self) -> dict:
        return {g: i for i, c in enumerate(self.conjugacy_classes) for g in c.elements}

    def gl4_classes(self) -> list[tuple[UniPoly, int]]:
        """Classes in GL(4, C): group elements by characteristic polynomial."""
        sizes: dict[UniPoly, int] = {}
        for c in self.conjugacy_classes:
            sizes[c.charpoly] = sizes.get(c.charpoly, 0) + c.size
        return sorted(sizes.items(), key=lambda kv: (kv[1], str(kv[0])))

    def orbit(self, pt: Sequence) -> list[ProjPoint]:
        return orbit(point(pt), self.generator_matrices)

    def stabilizer(self, pt: Sequence) -> list[GroupElement]:
        pt = point(pt)
        return [g for g, m in zip(self.elements, self.matrices) if transform_point(m, pt) == pt]


def orbit(pt: ProjPoint, gen_matrices: Sequence[Matrix]) -> list[ProjPoint]:
    """Orbit of a projective point under the group generated by the matrices."""
    seen = {pt}
    order = [pt]
    queue = deque([pt])
    while queue:
        x = queue.popleft()
        for m in gen_matrices:
            y = transform_point(m, x)
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


@lru_cache(maxsize=None)
def build_group(name: str) -> FiniteGroup:
    """Closure of the printed generators.

    Every generator is one-sided, sigma(p, 1) or sigma(1, q), so the group is the
    image of L x R with L, R the binary groups generated by the two sides.
    """
    if name not in GENERATORS:
        raise ValueError(f"unknown group {name!r}; expected one of {GROUP_NAMES}")
    gnames = GENERATORS[name]
    gens = tuple(pair(*PRINTED_PAIRS[n]) for n in gnames)
    left = quaternion_closure(g.p for g in gens if not g.p.is_identity())
    right = quaternion_closure(g.q for g in gens if not g.q.is_identity())
    if not all(g.p.is_identity() or g.q.is_identity() for g in gens):
        elements = closure(gens)
    else:
        elements = {GroupElement.make(p, q) for p in left for q in right}
    elements = sorted(elements, key=GroupElement.sort_key)
    return FiniteGroup(name, gnames, gens, elements, left, right)


# ---------------------------------------------------------------------------
# Raw matrix extensions (C, C' are in O(4) but not images of quaternion pairs)


def is_orthogonal(m: Matrix) -> bool:
    return mat_mul(transpose(m), m) == identity(len(m))


@dataclass
class MatrixGroup:
    base: FiniteGroup
    extra: tuple
    coset_reps: list

    @property
    def order(self) -> int:
        return len(self.coset_reps) * self.base.order

    def elements(self) -> list:
        return [mat_mul(c, m) for c in self.coset_reps for m in self.base.matrices]

    def __contains__(self, m: Matrix) -> bool:
        return any(mat_mul(transpose(c), m) in self.base.matrix_set for c in self.coset_reps)


def extend_by_matrices(G: FiniteGroup, extra: Sequence[Matrix]) -> MatrixGroup:
    """Group generated by G and extra orthogonal matrices, enumerated by left cosets of G."""
    extra = tuple(linalg.as_matrix(m) for m in extra)
    for m in extra:
        if not is_orthogonal(m):
            raise ValueError("extension matrices must be orthogonal")
    gens = tuple(G.generator_matrices) + extra
    members = G.matrix_set
    reps = [identity(4)]
    queue = deque(reps)
    while queue:
        r = queue.popleft()
        for s in gens:
            x = mat_mul(s, r)
            if not any(mat_mul(transpose(c), x) in members for c in reps):
                reps.append(x)
                queue.append(x)
    return MatrixGroup(G, extra, reps)


__all__ = [
    "Quaternion", "GroupElement", "FiniteGroup", "MatrixGroup", "ConjugacyClass",
    "build_group", "so4_matrix", "extend_by_matrices", "orbit", "closure",
    "charpoly_identity", "PRINTED_SO4", "PRINTED_PAIRS", "QUATS", "SU2_PRINTED",
    "pair", "GENERATORS", "GROUP_ORDERS", "GROUP_NAMES", "DEGREES", "is_orthogonal",
]
