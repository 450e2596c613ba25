"""Points and lines of P3 in canonical exact form."""

from __future__ import annotations

from typing import Sequence

from .linalg import kernel, mat_vec, rank, rref
from .scalar import ExactScalar, coerce

ProjPoint = tuple
ProjLine = tuple


def point(*coords) -> ProjPoint:
    """Canonical projective point: first nonzero coordinate scaled to 1."""
    if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
        coords = tuple(coords[0])
    coords = tuple(coerce(c) for c in coords)
    for c in coords:
        if c:
            if c == 1:
                return tuple(coords)
            inv = 1 / c
            return tuple(x * inv if x else x for x in coords)
    raise ValueError("the zero vector is not a projective point")


def transform_point(m, pt: ProjPoint) -> ProjPoint:
    return point(mat_vec(m, pt))


def line(u: Sequence, v: Sequence) -> ProjLine:
    """Canonical line through two distinct points: 2x4 reduced row echelon form."""
    red, _ = rref([tuple(u), tuple(v)])
    if len(red) != 2:
        raise ValueError("points do not span a line")
    return tuple(tuple(r) for r in red)


def line_from_basis(vectors: Sequence[Sequence]) -> ProjLine:
    red, _ = rref(vectors)
    if len(red) != 2:
        raise ValueError(f"subspace has dimension {len(red)}, not 2")
    return tuple(tuple(r) for r in red)


def transform_line(m, ln: ProjLine) -> ProjLine:
    return line(mat_vec(m, ln[0]), mat_vec(m, ln[1]))


def pivots(ln: ProjLine) -> tuple[int, int]:
    p0 = next(i for i, x in enumerate(ln[0]) if x)
    p1 = next(i for i, x in enumerate(ln[1]) if x)
    return p0, p1


def line_parameters(ln: ProjLine, pt: Sequence):
    """(u, v) with pt = u*g1 + v*g2, or None when pt is off the line."""
    c0, c1 = pivots(ln)
    u, v = pt[c0], pt[c1]
    for g1, g2, x in zip(ln[0], ln[1], pt):
        if x - (u * g1 if g1 else 0 * x) - (v * g2 if g2 else 0 * x):
            return None
    return u, v


def on_line(ln: ProjLine, pt: Sequence) -> bool:
    return line_parameters(ln, pt) is not None


def intersect(l1: ProjLine, l2: ProjLine) -> "ProjPoint | None":
    """Intersection point of two distinct lines, None when they are skew."""
    if l1 == l2:
        raise ValueError("a line does not meet itself in a single point")
    stacked = [l1[0], l1[1], l2[0], l2[1]]
    r = rank(stacked)
    if r == 4:
        return None
    # columns are the spanning vectors; a kernel vector gives a*g1 + b*g2 = c*h1 + d*h2
    cols = tuple(zip(*stacked))
    ker = kernel(cols)
    if len(ker) != 1:
        raise ValueError("degenerate line pair")
    a, b = ker[0][0], ker[0][1]
    return point(tuple(a * x + b * y for x, y in zip(l1[0], l1[1])))


def coords_str(pt: Sequence) -> str:
    return "(" + " : ".join(c.pretty() if isinstance(c, ExactScalar) else str(c) for c in pt) + ")"
