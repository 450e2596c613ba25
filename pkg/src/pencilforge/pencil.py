"""The pencils S_n + lambda * Q^(n/2): singular members, node certificates,
Wronskian audits on fix lines, the base locus and point/line configurations."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .binary import BinaryForm, interpolate
from .fixlines import fix_lines, line_str
from .groups import DEGREES, FiniteGroup, build_group, orbit
from .linalg import rank
from .poly import MultiPoly, evaluate_all, quadric, quadric_power
from .invariants import pencil_polynomials
from .projective import ProjLine, coords_str, line_parameters, point
from .scalar import ONE, SQRT2, SQRT5, TAU, ZERO, ComplexScalar, ExactScalar, coerce

__all__ = [
    "Pencil",
    "PencilMember",
    "SingularOrbitReport",
    "build_pencil",
    "member_through",
    "seed_points",
    "singular_orbits",
    "certify_node",
    "restrict_to_line",
    "wronskian_audit",
    "audit_all_lines",
    "base_locus",
    "configurations",
    "ConfigurationReport",
    "bound_report",
]

GROUP_OF_DEGREE = {d: name for name, d in DEGREES.items()}


@dataclass(frozen=True)
class PencilMember:
    """a*S + b*Q^(n/2); canonical with a = 1 when a != 0."""

    a: ExactScalar
    b: ExactScalar

    @staticmethod
    def make(a, b) -> "PencilMember":
        a, b = coerce(a), coerce(b)
        if not a and not b:
            raise ValueError("(0:0) is not a pencil member")
        if a:
            return PencilMember(ONE, b / a)
        return PencilMember(ZERO, ONE)

    @staticmethod
    def from_lambda(lam) -> "PencilMember":
        return PencilMember(ONE, coerce(lam))

    @property
    def is_multiple_quadric(self) -> bool:
        return not self.a

    @property
    def lam(self) -> ExactScalar:
        if not self.a:
            raise ValueError("the multiple quadric has lambda = infinity")
        return self.b

    def label(self) -> str:
        return "Q^(n/2)" if not self.a else self.b.pretty()


@dataclass
class Pencil:
    n: int
    S: MultiPoly
    Qpow: MultiPoly
    group: FiniteGroup

    def __post_init__(self):
        self._grad_S = self.S.gradient()
        self._grad_Q = self.Qpow.gradient()

    def polynomial(self, member: PencilMember) -> MultiPoly:
        return self.S * member.a + self.Qpow * member.b

    def gradient_at(self, member: PencilMember, pt: Sequence) -> list:
        vals = evaluate_all(list(self._grad_S) + list(self._grad_Q), pt)
        return [member.a * s + member.b * q for s, q in zip(vals[:4], vals[4:])]


@lru_cache(maxsize=None)
def build_pencil(n: int) -> Pencil:
    if n not in GROUP_OF_DEGREE:
        raise ValueError(f"no pencil of degree {n}; expected one of {sorted(GROUP_OF_DEGREE)}")
    pp = pencil_polynomials()
    return Pencil(n, pp.S[n], quadric_power(n), build_group(GROUP_OF_DEGREE[n]))


def member_through(pencil: Pencil, pt: Sequence) -> PencilMember:
    """The member containing pt: lambda = -S(pt)/Q(pt)^(n/2)."""
    s, q = evaluate_all([pencil.S, pencil.Qpow], pt)
    if not q:
        raise ValueError(f"{coords_str(pt)} lies on the quadric; no member is singular there")
    return PencilMember.from_lambda(-s / q)


def _pt(*c) -> tuple:
    return point(*[coerce(x) for x in c])


def seed_points(n: int) -> list[tuple[tuple, str]]:
    """Printed polytope coordinates used as seeds, with a provenance tag."""
    t = TAU
    r2 = SQRT2
    h = Fraction(1, 2)
    if n == 6:
        return [
            (_pt(1, 1, 0, 0), "{3,4,3} vertex"),
            (_pt(1, 0, 0, 0), "{3,4,3}' vertex"),
            (_pt(1, 1, 1, 1), "{3,4,3}' vertex"),
            (_pt(3, 1, -1, 1), "edge midpoint on the pi3pi3' line"),
            (_pt(0, 2, 1, -1), "edge midpoint on the pi3pi3'^2 line"),
        ]
    if n == 8:
        return [
            (_pt(1, 1, 0, 0), "{3,4,3} vertex"),
            (_pt(1, 0, 0, 0), "{3,4,3}' vertex"),
            (_pt(1, 1, 1, 1), "{3,4,3}' vertex"),
            (_pt(3, 1, -1, 1), "edge midpoint"),
            (_pt(0, 2, 1, -1), "edge midpoint"),
            (_pt(r2 + 1, 1, 0, 0), "family (1)"),
            (_pt(r2 - 1, 1, 0, 0), "family (1)"),
            (_pt(1 + r2 * h, 1 + r2 * h, r2 * h, r2 * h), "family (2)"),
            (_pt(1 - r2 * h, 1 - r2 * h, r2 * h, r2 * h), "family (2)"),
            (_pt(1, 1, r2, 0), "family (3)"),
            (_pt(1 + r2 * h, 1 - r2 * h, r2 * h, r2 * h), "family (4)"),
        ]
    if n == 12:
        return [
            (_pt(1, 1, 0, 0), "{5,3,3} vertex (2,2,0,0)"),
            (_pt(SQRT5, 1, 1, 1), "{5,3,3} vertex (sqrt5,1,1,1)"),
            (_pt(0, t * t, 1, 0), "{5,3,3} edge midpoint"),
            (_pt(1, t, 0, 0), "{3,3,5} edge midpoint"),
            (_pt(1, 0, 0, 0), "{3,3,5} vertex (2,0,0,0)"),
            (_pt(1, 1, 1, 1), "{3,3,5} vertex (1,1,1,1)"),
        ]
    raise ValueError(f"no seeds for degree {n}")


@dataclass
class SingularOrbitReport:
    member: PencilMember
    points: list
    representative: tuple
    hessian_rank: int
    is_node: bool
    seeds: list  # provenance tags
    orbits: int  # distinct orbits among the seeds for this member
    gradient_checked: int
    spot_checks: list = field(default_factory=list)

    @property
    def orbit_size(self) -> int:
        return len(self.points)

    @property
    def lam(self) -> ExactScalar:
        return self.member.lam


def certify_node(pencil: Pencil, member: PencilMember, pt: Sequence) -> dict:
    grad = pencil.gradient_at(member, pt)
    F = pencil.polynomial(member)
    r = rank(F.hessian(pt))
    zero = not any(grad)
    value_zero = not F.evaluate(pt)
    return {"on_surface": value_zero, "gradient_zero": zero, "hessian_rank": r,
            "is_node": value_zero and zero and r == 3}


def singular_orbits(pencil: Pencil, *, spot_checks: int = 2, rng_seed: int = 0) -> list[SingularOrbitReport]:
    """Orbits of the seed points, certified exactly, merged per member, sorted by lambda."""
    gens = pencil.group.generator_matrices
    by_member: dict = {}
    for pt, tag in seed_points(pencil.n):
        member = member_through(pencil, pt)
        entry = by_member.setdefault(member, {"orbits": [], "tags": []})
        entry["tags"].append(tag)
        if any(pt in o for o in entry["orbits"]):
            continue
        entry["orbits"].append(set(orbit(pt, gens)))
    rng = random.Random(rng_seed)
    reports = []
    for member, entry in by_member.items():
        pts = set().union(*entry["orbits"])
        ordered = sorted(pts)
        checked = 0
        for p in ordered:
            if any(pencil.gradient_at(member, p)):
                raise ArithmeticError(
                    f"gradient of F_{pencil.n}({member.label()}) does not vanish at {coords_str(p)}")
            checked += 1
        rep = ordered[0]
        cert = certify_node(pencil, member, rep)
        spots = []
        for p in rng.sample(ordered, min(spot_checks, len(ordered))):
            spots.append(certify_node(pencil, member, p)["hessian_rank"])
        reports.append(SingularOrbitReport(
            member, ordered, rep, cert["hessian_rank"], cert["is_node"], entry["tags"],
            len(entry["orbits"]), checked, spots))
    reports.sort(key=lambda r: r.lam)
    return reports


# ---------------------------------------------------------------------------
# Restriction to lines and the Wronskian audit


def restrict_to_line(P: MultiPoly, L: ProjLine) -> BinaryForm:
    """P(u*g1 + v*g2) as a binary form of degree deg P, by interpolation at (t:1)."""
    d = P.degree
    g1, g2 = L
    values = []
    for k in range(d + 1):
        pt = tuple(a * k + b for a, b in zip(g1, g2))
        values.append(P.evaluate(pt))
    return BinaryForm(interpolate(values), d)


@dataclass
class LineAudit:
    line: ProjLine
    label: str
    wronskian_degree: int
    points_per_member: dict  # lambda string -> number of known singular points on the line
    factor_multiplicities: list  # multiplicity of each known point's linear factor
    meets_base_locus: bool
    base_points_simple: bool
    quadric_power: int
    remainder_degree: int
    bound: int

    @property
    def complete(self) -> bool:
        return self.remainder_degree == 0

    @property
    def ok(self) -> bool:
        total = sum(self.points_per_member.values())
        return (self.complete and all(m == 1 for m in self.factor_multiplicities)
                and total <= self.bound and self.base_points_simple)


def wronskian_audit(pencil: Pencil, L: ProjLine, known: Sequence[tuple[tuple, PencilMember]],
                    label: str = "") -> LineAudit:
    """Divide W0 = s_u q_v - s_v q_u by the known singular points and by q.

    A constant cofactor means every ramification point of (S : Q^(n/2)) on L
    away from the quadric is one of the known singular points.
    """
    s = restrict_to_line(pencil.S, L)
    q = restrict_to_line(quadric(), L)
    W = s.du() * q.dv() - s.dv() * q.du()
    if W.is_zero():
        raise ArithmeticError(f"Wronskian vanishes identically on {line_str(L)}")
    per_member: dict = {}
    mults = []
    rest = W
    for pt, member in known:
        params = line_parameters(L, pt)
        if params is None:
            continue
        per_member[member.label()] = per_member.get(member.label(), 0) + 1
        rest, k = rest.divide_out(BinaryForm.linear_vanishing_at(*params))
        mults.append(k)
    rest, qk = rest.divide_out(q)
    base = s.gcd(q)
    meets = base.degree > 0
    simple = True
    if meets:
        cof, ok = s.divmod_exact(base)
        simple = ok and cof.gcd(base).degree == 0 and base.is_squarefree()
    bound = pencil.n - 2 if meets else pencil.n
    return LineAudit(L, label, W.degree, per_member, mults, meets, simple, qk,
                     rest.degree if not rest.is_zero() else -1, bound)


def audit_all_lines(pencil: Pencil, orbits: Sequence[SingularOrbitReport]) -> list[LineAudit]:
    """Audit a representative line of every fix-line class of the pencil's group."""
    known = [(p, r.member) for r in orbits for p in r.points]
    out = []
    for cls in fix_lines(pencil.group.name):
        out.append(wronskian_audit(pencil, cls.representative_line, known, cls.label))
    return out


# ---------------------------------------------------------------------------
# Base locus on the quadric


def _segre(v1, v2, w1, w2) -> tuple:
    """Point of Q = 0 attached to v (x) w under the identification with 2x2 matrices."""
    i2 = ComplexScalar(ZERO, Fraction(-1, 2))  # 1/(2i)
    h = Fraction(1, 2)
    return (
        (v1 * w1 + v2 * w2) * h,
        (v1 * w1 - v2 * w2) * i2,
        (v1 * w2 - v2 * w1) * h,
        (v1 * w2 + v2 * w1) * i2,
    )


def _bidegree_coefficients(P: MultiPoly) -> list[list]:
    """c[j][k]: coefficient of v1^j v2^(n-j) w1^k w2^(n-k) in P(v (x) w)."""
    n = P.degree
    one = ComplexScalar(ONE)
    grid = [[P.evaluate(_segre(one * a, one, one * b, one)) for b in range(n + 1)] for a in range(n + 1)]
    by_a = [interpolate(row) for row in grid]  # by_a[a][k]
    cols = [interpolate([by_a[a][k] for a in range(n + 1)]) for k in range(n + 1)]  # cols[k][j]
    return [[cols[k][j] for k in range(n + 1)] for j in range(n + 1)]


@lru_cache(maxsize=None)
def base_locus(n: int) -> dict:
    """Per ruling: gcd of the coefficient forms of S_n(v (x) w); degree n and squarefree."""
    pencil = build_pencil(n)
    c = _bidegree_coefficients(pencil.S)
    out = {}
    for ruling in ("v", "w"):
        g = None
        for k in range(n + 1):
            coeffs = [c[j][k] for j in range(n + 1)] if ruling == "v" else [c[k][j] for j in range(n + 1)]
            form = BinaryForm(coeffs, n)
            g = form if g is None else g.gcd(form)
        out[ruling] = {"gcd_degree": g.degree, "squarefree": g.is_squarefree(), "gcd": g}
    out["total_lines"] = out["v"]["gcd_degree"] + out["w"]["gcd_degree"]
    out["reduced"] = out["v"]["squarefree"] and out["w"]["squarefree"]
    out["ok"] = out["v"]["gcd_degree"] == n and out["w"]["gcd_degree"] == n and out["reduced"]
    return out


# ---------------------------------------------------------------------------
# Configurations of fix lines and singular points


@dataclass
class ConfigurationReport:
    label: str
    member: PencilMember
    lines: int  # l
    points_per_line: int  # pi
    points: int  # p
    lines_per_point: int  # lambda

    @property
    def balanced(self) -> bool:
        return self.points * self.lines_per_point == self.lines * self.points_per_line

    def notation(self) -> str:
        return f"({self.lines}_{self.points_per_line},{self.points}_{self.lines_per_point})"


def configurations(pencil: Pencil, orbits: Sequence[SingularOrbitReport]) -> list[ConfigurationReport]:
    """(l_pi, p_lambda) for each fix-line class and singular member meeting it."""
    out = []
    for cls in fix_lines(pencil.group.name):
        L = cls.representative_line
        for r in orbits:
            pi = sum(1 for p in r.points if line_parameters(L, p) is not None)
            if not pi:
                continue
            lam = sum(1 for ln in cls.lines if line_parameters(ln, r.representative) is not None)
            out.append(ConfigurationReport(cls.label, r.member, cls.size, pi, r.orbit_size, lam))
    return out


GENERIC_POINT = (1, 2, 3, 5)


def bound_report(n: int, *, verify_generic: bool = True) -> dict:
    """n/2 (n-1)^2 and the length |G|/2 of a generic orbit in P3.

    With ``verify_generic`` the orbit of (1:2:3:5) is closed to confirm the length.
    """
    G = build_group(GROUP_OF_DEGREE[n])
    out = {"n": n, "naive_bound": n * (n - 1) ** 2 // 2, "generic_orbit": G.order // 2}
    if verify_generic:
        out["generic_orbit_computed"] = len(orbit(point(GENERIC_POINT), G.generator_matrices))
    if n == 12:
        out["context"] = "600 ≤ μ(12) ≤ 645"
    return out
