"""Group action on polynomials, invariant bases by exact elimination, and the
explicit invariants S6, S8, S12 of the pencils."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import gcd
from typing import Sequence

from .groups import DEGREES, FiniteGroup, build_group
from .linalg import rank, rref
from .poly import MultiPoly, monomials, pack, quadric, quadric_power
from .scalar import ONE, SQRT5, ZERO, ComplexScalar, coerce

__all__ = [
    "act",
    "is_invariant",
    "invariant_basis",
    "in_span",
    "signed_permutation",
    "symmetric_sum",
    "alternating_part_f_a",
    "PencilPolynomials",
    "pencil_polynomials",
    "witness_point",
    "euler_check",
]


def act(g, P: MultiPoly) -> MultiPoly:
    """P(g x): substitute x_i -> sum_j g[i][j] x_j."""
    forms = [MultiPoly.linear_form(row) for row in g]
    return P.substitute_linear(forms)


def is_invariant(P: MultiPoly, matrices: Sequence) -> bool:
    return all(act(g, P) == P for g in matrices)


def signed_permutation(m) -> "tuple[tuple[int, ...], tuple[int, ...]] | None":
    """(perm, signs) with m[i][perm[i]] = signs[i] when m is a signed permutation matrix."""
    perm, signs = [], []
    for row in m:
        nz = [(j, x) for j, x in enumerate(row) if x]
        if len(nz) != 1 or not (nz[0][1] == 1 or nz[0][1] == -1):
            return None
        perm.append(nz[0][0])
        signs.append(1 if nz[0][1] == 1 else -1)
    return tuple(perm), tuple(signs)


def _monomial_image(exps, perm, signs) -> tuple[int, int]:
    """x^e composed with x -> Mx for a signed permutation: returns (sign, packed exponent)."""
    out = [0, 0, 0, 0]
    s = 1
    for i, a in enumerate(exps):
        if a:
            out[perm[i]] += a
            if signs[i] < 0 and a & 1:
                s = -s
    return s, pack(out)


def _orbit_sum_columns(degree: int, monos: Sequence[tuple[int, ...], ...]) -> list[MultiPoly]:
    """Orbit sums of monomials under a finite group of signed permutations.

    Any invariant is a combination of these, since the monomial subgroup
    permutes monomials up to sign.
    """
    seen: set = set()
    cols = []
    for e in monomials(degree):
        k = pack(e)
        if k in seen:
            continue
        acc: dict = {}
        for perm, signs in monos:
            s, k2 = _monomial_image(e, perm, signs)
            seen.add(k2)
            acc[k2] = acc.get(k2, 0) + s
        acc = {kk: v for kk, v in acc.items() if v}
        if not acc:
            continue
        g = 0
        for v in acc.values():
            g = gcd(g, v)
        cols.append(MultiPoly({kk: coerce(v // g) for kk, v in acc.items()}))
    return cols


def _monomial_columns(degree: int) -> list[MultiPoly]:
    return [MultiPoly({pack(e): ONE}) for e in monomials(degree)]


def _canonical_basis(polys: Sequence[MultiPoly], degree: int) -> list[MultiPoly]:
    """Reduced echelon form of the coefficient vectors in graded-lex order."""
    if not polys:
        return []
    keys = [pack(e) for e in monomials(degree)]
    used = sorted({k for p in polys for k in p.terms}, key=keys.index)
    rows = [[p.terms.get(k, ZERO) for k in used] for p in polys]
    red, _ = rref(rows)
    return [MultiPoly({k: c for k, c in zip(used, r) if c}) for r in red]


def invariant_basis(G: FiniteGroup, degree: int, *, compress: bool = True) -> list[MultiPoly]:
    """Basis of the degree-d invariants, canonical (echelon) in graded-lex order.

    With ``compress`` the unknowns are orbit sums of monomials under the
    signed-permutation elements of G, and only the remaining generators are
    imposed as linear conditions.  Without it, every monomial is an unknown and
    every generator is imposed; both routes must give the same basis.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    gens = G.generator_matrices
    if compress:
        monos = []
        for m in G.matrices:
            sp = signed_permutation(m)
            if sp is not None:
                monos.append(sp)
        cols = _orbit_sum_columns(degree, monos)
        dense = [g for g in gens if signed_permutation(g) is None]
    else:
        cols = _monomial_columns(degree)
        dense = list(gens)
    if not cols:
        return []
    rows_by_key: dict = {}
    ncols = len(cols)
    for g in dense:
        for j, col in enumerate(cols):
            diff = act(g, col) - col
            for k, c in diff.terms.items():
                row = rows_by_key.get((id(g), k))
                if row is None:
                    row = rows_by_key[(id(g), k)] = [ZERO] * ncols
                row[j] = c
    rows = list(rows_by_key.values())
    if rows:
        red, piv = rref(rows)
        free = [j for j in range(ncols) if j not in set(piv)]
    else:
        red, piv, free = [], [], list(range(ncols))
    basis = []
    for f in free:
        coeffs = [ZERO] * ncols
        coeffs[f] = ONE
        for r, p in zip(red, piv):
            coeffs[p] = -r[f]
        acc = MultiPoly()
        for c, col in zip(coeffs, cols):
            if c:
                acc = acc + col * c
        basis.append(acc)
    return _canonical_basis(basis, degree)


def in_span(P: MultiPoly, basis: Sequence[MultiPoly]) -> bool:
    keys = sorted({k for b in basis for k in b.terms} | set(P.terms))
    rows = [[b.terms.get(k, ZERO) for k in keys] for b in basis]
    return rank(rows + [[P.terms.get(k, ZERO) for k in keys]]) == rank(rows) if rows else not P


# --- explicit polynomials ---------------------------------------------------

def symmetric_sum(pattern: Sequence[int], convention: str, square: bool = True) -> MultiPoly:
    """Sum of y_i^a y_j^b ... over pairwise distinct indices, y_i = x_i^2.

    ``distinct`` counts every distinct monomial once; ``ordered`` sums over
    ordered index tuples, so a monomial with repeated exponents is counted
    once per rearrangement of equal exponents.
    """
    if convention not in ("distinct", "ordered"):
        raise ValueError(f"unknown convention {convention!r}")
    scale = 2 if square else 1
    acc: dict = {}
    for idx in permutations(range(4), len(pattern)):
        e = [0, 0, 0, 0]
        for i, a in zip(idx, pattern):
            e[i] = scale * a
        k = pack(e)
        if convention == "ordered":
            acc[k] = acc.get(k, 0) + 1
        else:
            acc[k] = 1
    return MultiPoly({k: coerce(v) for k, v in acc.items()})


def _y(*exps) -> tuple[int, int, int, int]:
    return tuple(2 * a for a in exps)


def _cyclic_bracket(a: int, b: int, c: int) -> list[tuple[int, tuple]]:
    """y_a^2 y_b - y_a y_b^2 + y_b^2 y_c - y_b y_c^2 + y_c^2 y_a - y_c y_a^2."""
    out = []
    for (p, r) in ((a, b), (b, c), (c, a)):
        e1 = [0, 0, 0, 0]
        e1[p] += 2
        e1[r] += 1
        e2 = [0, 0, 0, 0]
        e2[p] += 1
        e2[r] += 2
        out.append((1, tuple(e1)))
        out.append((-1, tuple(e2)))
    return out


def alternating_part_f_a() -> MultiPoly:
    terms: dict = {}
    for sign, lead, bracket in ((1, 0, (1, 2, 3)), (-1, 1, (2, 3, 0)),
                                (1, 2, (0, 1, 3)), (-1, 3, (0, 1, 2))):
        for s, e in _cyclic_bracket(*bracket):
            e = list(e)
            e[lead] += 3
            key = pack(_y(*e))
            terms[key] = terms.get(key, 0) + sign * s
    return MultiPoly({k: coerce(v) for k, v in terms.items() if v})


F_S_COEFFS = (
    ((5, 1), 2), ((4, 2), -6), ((4, 1, 1), -12), ((3, 3), 14), ((3, 2, 1), 9),
    ((3, 1, 1, 1), 348), ((2, 2, 2), 30), ((2, 2, 1, 1), -270),
)


def _s6(conv: str) -> MultiPoly:
    return symmetric_sum((3,), conv) + symmetric_sum((1, 1, 1), conv) * 15


def _s8(conv: str) -> MultiPoly:
    return (symmetric_sum((4,), conv) + symmetric_sum((2, 2), conv) * 14
            + MultiPoly.from_exponents({_y(1, 1, 1, 1): 168}))


def _f_s(conv: str) -> MultiPoly:
    acc = MultiPoly()
    for pattern, c in F_S_COEFFS:
        acc = acc + symmetric_sum(pattern, conv) * c
    return acc


@dataclass
class PencilPolynomials:
    Q: MultiPoly
    S: dict  # degree -> MultiPoly
    f_s: MultiPoly
    f_a: MultiPoly
    metadata: dict = field(default_factory=dict)

    def pencil_generators(self, n: int) -> tuple[MultiPoly, MultiPoly]:
        return self.S[n], quadric_power(n)


def _resolve(name: str, builders, matrices, notes: dict):
    for conv in ("distinct", "ordered"):
        for label, P in builders(conv):
            if is_invariant(P, matrices):
                notes[name] = {"convention": conv, "variant": label}
                return P
    raise ValueError(f"no summation convention makes {name} invariant")


@lru_cache(maxsize=None)
def pencil_polynomials() -> PencilPolynomials:
    """Construct Q, S6, S8, f_s, f_a, S12, checking invariance under G6, G8, G12.

    Raises ValueError when neither reading of the index sums gives an invariant.
    """
    notes: dict = {}
    g6 = build_group("G6").generator_matrices
    g8 = build_group("G8").generator_matrices
    g12 = build_group("G12").generator_matrices
    s6 = _resolve("S6", lambda c: [("printed", _s6(c))], g6, notes)
    s8 = _resolve("S8", lambda c: [("printed", _s8(c))], g8, notes)
    f_a = alternating_part_f_a()

    def s12_variants(conv):
        fs = _f_s(conv)
        return [("+33*r5", fs + f_a * (SQRT5 * 33)), ("-33*r5", fs - f_a * (SQRT5 * 33))]

    s12 = _resolve("S12", s12_variants, g12, notes)
    conv12 = notes["S12"]["convention"]
    notes["S12"]["sqrt5_sign_flipped"] = notes["S12"]["variant"] != "+33*r5"
    return PencilPolynomials(Q=quadric(), S={6: s6, 8: s8, 12: s12},
                            f_s=_f_s(conv12), f_a=f_a, metadata=notes)


def witness_point() -> tuple:
    """(i*sqrt2, 1, 1, 0): on the cone Q = 0, used to separate S_n from Q^(n/2)."""
    from .scalar import SQRT2
    return (ComplexScalar(ZERO, SQRT2), ComplexScalar(ONE), ComplexScalar(ONE), ComplexScalar(ZERO))


def euler_check(P: MultiPoly) -> bool:
    """sum x_i dP/dx_i == deg(P) * P for homogeneous P."""
    acc = MultiPoly()
    for i, d in enumerate(P.gradient()):
        acc = acc + MultiPoly.variable(i) * d
    return acc == P * P.degree


def group_for_degree(n: int) -> FiniteGroup:
    for name, d in DEGREES.items():
        if d == n:
            return build_group(name)
    raise ValueError(f"no pencil of degree {n}")
