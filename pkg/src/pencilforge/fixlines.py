"""Lines of fixed points of group elements, their classes, orbits and intersections."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .groups import GroupElement, build_group, pair, so4_matrix
from .linalg import identity, kernel, mat_scale, mat_sub, rank
from .poly import quadric
from .projective import ProjLine, coords_str, intersect, line, line_from_basis, transform_line
from .scalar import ONE, SQRT2, TAU, ComplexScalar

__all__ = [
    "FixLineClass",
    "named_element",
    "PRINTED_FIX_LINES",
    "fix_lines_of",
    "fix_lines",
    "line_orbit",
    "line_intersections",
    "class_intersections",
    "ruling_fix_lines",
    "RulingReport",
    "line_str",
]


def _L(u, v) -> ProjLine:
    return line(u, v)


_r2 = SQRT2

# Lines printed as generators of fix lines of class representatives.
PRINTED_FIX_LINES = {
    "sigma24": [_L((0, 0, 1, 0), (1, 0, 0, 0)), _L((0, 0, 0, 1), (0, 1, 0, 0))],
    "pi3pi3'": [_L((1, 0, 0, 0), (0, 1, -1, 1))],
    "pi3pi3'^2": [_L((0, 1, 1, 0), (0, -1, 0, 1))],
    "pi3pi4pi3'pi4'": [_L((1, 0, 0, 0), (0, 1, 0, 1)), _L((0, 1, 0, -1), (0, 0, 1, 0))],
    "pi3pi4sigma4": [_L((1, _r2, 1, 0), (0, 1, _r2, 1)), _L((_r2, -1, 0, 1), (1, -_r2, 1, 0))],
    "pi5pi5'": [_L((1, 0, 0, 0), (0, 0, TAU - 1, 1))],
    # representative pi5^2 sigma2 pi5'^2 sigma4 of the pi3pi3' class of G12
    "pi3pi3'@G12": [_L((1, 0, 0, 0), (0, TAU * TAU, 1, 0))],
}

# Classes identified by a printed element product instead of a printed line.
ELEMENT_LABELS = {
    "sigma2pi3'pi4'": (("q2", None), (None, "p3"), (None, "p4")),
}


def named_element(factors) -> GroupElement:
    g = pair(None, None)
    for left, right in factors:
        g = g * pair(left, right)
    return g


def line_str(ln: ProjLine) -> str:
    return f"<{coords_str(ln[0])}, {coords_str(ln[1])}>"


@dataclass
class FixLineClass:
    """Fix lines of one or more conjugacy classes that share the same line set."""

    label: str
    lines: frozenset
    representative: GroupElement
    member_classes: list  # (charpoly string, class size, eigenvalue signs)
    elements_per_line: int = 0
    representative_line: ProjLine = None
    notes: list = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.lines)


def fix_lines_of(m) -> list[tuple[int, ProjLine]]:
    """(eigenvalue, line) for each eigenvalue +-1 whose eigenspace has dimension 2."""
    out = []
    ident = identity(4)
    for ev in (1, -1):
        ker = kernel(mat_sub(m, mat_scale(ident, ev)))
        if len(ker) == 2:
            out.append((ev, line_from_basis(ker)))
    return out


def _may_have_fix_line(g: GroupElement) -> bool:
    # eigenvalues are products of those of p and q; a double +-1 needs re(p) = +-re(q)
    a, b = g.p.w, g.q.w
    if (a == 1 or a == -1) and (b == 1 or b == -1):
        return False
    return a == b or a == -b


@lru_cache(maxsize=None)
def fix_lines(name: str) -> tuple[FixLineClass, ...]:
    """Fix-line classes of a group: lines of elements, grouped by conjugacy class,
    then classes sharing a line merged (union-find)."""
    G = build_group(name)
    class_lines: dict[int, set] = {}
    class_signs: dict[int, set] = {}
    line_elems: dict = {}
    for idx, cls in enumerate(G.conjugacy_classes):
        rep = cls.representative
        if not _may_have_fix_line(rep):
            continue
        if not fix_lines_of(so4_matrix(rep)):
            continue
        lines = set()
        for g in cls.elements:
            for ev, ln in fix_lines_of(so4_matrix(g)):
                lines.add(ln)
                class_signs.setdefault(idx, set()).add(ev)
                line_elems.setdefault(ln, set()).add(g)
        class_lines[idx] = lines
    parent = {i: i for i in class_lines}

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict = {}
    for i, lines in class_lines.items():
        for ln in lines:
            if ln in owner:
                parent[find(i)] = find(owner[ln])
            else:
                owner[ln] = i
    groups: dict[int, list[int]] = {}
    for i in class_lines:
        groups.setdefault(find(i), []).append(i)
    out = []
    for members in groups.values():
        lines = frozenset().union(*(class_lines[i] for i in members))
        classes = G.conjugacy_classes
        rep_idx = min(members, key=lambda i: (classes[i].size, classes[i].representative.sort_key()))
        info = [(str(classes[i].charpoly), classes[i].size, sorted(class_signs[i])) for i in sorted(members)]
        label, rep_line = _label_for(name, lines)
        if label == "unlabelled":
            for elabel, factors in ELEMENT_LABELS.items():
                own = [ln for _, ln in fix_lines_of(so4_matrix(named_element(factors)))]
                if own and own[0] in lines:
                    label, rep_line = elabel, own[0]
        per_line = {len(line_elems[ln]) for ln in lines}
        fc = FixLineClass(label, lines, classes[rep_idx].representative, info,
                          per_line.pop() if len(per_line) == 1 else -1, rep_line)
        out.append(fc)
    out.sort(key=lambda c: (-c.size, c.label))
    return tuple(out)


def _label_for(name: str, lines: frozenset) -> tuple[str, ProjLine]:
    for label, printed in PRINTED_FIX_LINES.items():
        hit = [ln for ln in printed if ln in lines]
        if hit:
            base = label.split("@")[0]
            if "@" in label and not label.endswith(name):
                continue
            return base, hit[0]
    return "unlabelled", min(lines, key=lambda l: line_str(l))


def line_orbit(ln: ProjLine, gen_matrices: Sequence) -> set:
    seen = {ln}
    frontier = [ln]
    while frontier:
        nxt = []
        for x in frontier:
            for m in gen_matrices:
                y = transform_line(m, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def line_intersections(l1: ProjLine, l2: ProjLine) -> "dict | None":
    """Intersection point of two distinct lines with realness and quadric checks.

    Returns None for skew lines.
    """
    pt = intersect(l1, l2)
    if pt is None:
        return None
    qv = quadric().evaluate(pt)
    real = not any(isinstance(c, ComplexScalar) and c.im for c in pt)
    return {"point": pt, "real": real, "on_quadric": not qv}


def class_intersections(name: str) -> dict:
    """Intersections of a representative of each fix-line class with every fix line.

    Up to the group action this covers all pairs, since both realness and the
    quadric are preserved by G.
    """
    classes = fix_lines(name)
    all_lines = [ln for c in classes for ln in sorted(c.lines, key=line_str)]
    n_pairs = n_meet = 0
    bad = []
    for c in classes:
        L = c.representative_line
        for M in all_lines:
            if M == L:
                continue
            n_pairs += 1
            res = line_intersections(L, M)
            if res is None:
                continue
            n_meet += 1
            if not res["real"] or res["on_quadric"]:
                bad.append((line_str(L), line_str(M)))
    return {"pairs": n_pairs, "meeting": n_meet, "violations": bad}


# ---------------------------------------------------------------------------
# One-sided elements: lines in the two rulings of the quadric


@dataclass
class RulingReport:
    side: str
    materialized: list  # ProjLines over ComplexScalar
    unmaterialized: int  # elements whose eigenvalues lie outside Q(i, sqrt2, sqrt5)
    all_on_quadric: bool


def _complex_line_on_quadric(ln) -> bool:
    Q = quadric()
    a, b = ln
    s = tuple(x + y for x, y in zip(a, b))
    return not Q.evaluate(a) and not Q.evaluate(b) and not Q.evaluate(s)


def ruling_eigenlines(m, re_part) -> "list | None":
    """Both eigenlines of a one-sided element, or None if sqrt(1 - a^2) is not in the field."""
    im = (ONE - re_part * re_part).try_sqrt()
    if im is None:
        return None
    out = []
    for s in (1, -1):
        ev = ComplexScalar(re_part, im * s)
        shifted = tuple(tuple(x - ev if i == j else ComplexScalar(x) for j, x in enumerate(row))
                        for i, row in enumerate(m))
        ker = kernel(shifted)
        if len(ker) != 2:
            raise ArithmeticError("one-sided element without a 2-dimensional eigenspace")
        out.append(line_from_basis(ker))
    return out


def ruling_fix_lines(name: str) -> dict[str, RulingReport]:
    """Eigenlines of sigma(p, 1) and sigma(1, q), both on the quadric."""
    G = build_group(name)
    reports = {}
    for side in ("left", "right"):
        lines: set = set()
        skipped = 0
        for g in G.elements:
            other = g.q if side == "left" else g.p
            mine = g.p if side == "left" else g.q
            if not other.is_identity() or mine.is_identity():
                continue
            if mine.w == 1 or mine.w == -1:
                continue
            got = ruling_eigenlines(so4_matrix(g), mine.w)
            if got is None:
                skipped += 1
                continue
            lines.update(got)
        reports[side] = RulingReport(side, sorted(lines, key=line_str), skipped,
                                     all(_complex_line_on_quadric(ln) for ln in lines))
    return reports


def rulings_meet_once(left: Sequence, right: Sequence) -> bool:
    """Each left line meets each right line in exactly one point, lines of one side are disjoint."""
    for a in left:
        for b in right:
            if rank([a[0], a[1], b[0], b[1]]) != 3:
                return False
    for side in (left, right):
        for i, a in enumerate(side):
            for b in side[i + 1:]:
                if rank([a[0], a[1], b[0], b[1]]) != 4:
                    return False
    return True
