"""Checks of every computed table against the published values.

Each ``check_*`` function returns a :class:`Check` whose ``failures`` list names
the offending table cells; an empty list means the criterion holds.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import reference as ref
from .fixlines import PRINTED_FIX_LINES, class_intersections, fix_lines, line_orbit, line_str
from .groups import (PRINTED_PAIRS, PRINTED_SO4, build_group, extend_by_matrices,
                     is_orthogonal, pair, so4_matrix)
from .invariants import group_for_degree, in_span, invariant_basis, is_invariant, pencil_polynomials, witness_point
from .linalg import det, mat_mul, transpose
from .molien import molien
from .pencil import (PencilMember, audit_all_lines, base_locus, bound_report, build_pencil, configurations,
                     singular_orbits)
from .poly import quadric_power
from .render import RenderScene, foreground_fraction, mesh, raster, write_obj, write_ppm
from .scalar import ComplexScalar

__all__ = ["Check", "CRITERIA", "run_checks", "pencil_results", "printed_extension_check"]


@dataclass
class Check:
    criterion: int
    name: str
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, cell: str, got, want) -> None:
        if got != want:
            self.failures.append(f"{cell}: got {got}, expected {want}")


@lru_cache(maxsize=None)
def pencil_results(n: int) -> tuple:
    """(pencil, singular orbit reports), computed once per degree."""
    pencil = build_pencil(n)
    return pencil, tuple(singular_orbits(pencil))


def check_group_orders() -> Check:
    c = Check(1, "group orders")
    for name, want in ref.GROUP_ORDERS.items():
        c.expect(f"|{name}|", build_group(name).order, want)
    for (base, extra), want in ref.EXTENSION_ORDERS.items():
        ext = extend_by_matrices(build_group(base), [PRINTED_SO4[e] for e in extra])
        c.expect(f"|<{base}, {', '.join(extra)}>|", ext.order, want)
    return c


def printed_extension_check(name: str) -> list[str]:
    """Failures for the printed reflections C and C'.

    They are not images of quaternion pairs, so fidelity means: orthogonal with
    determinant -1, C swaps the two sides of every printed generator, and C'
    normalizes G6 and G8.
    """
    m = PRINTED_SO4[name]
    bad = []
    if not is_orthogonal(m):
        bad.append(f"{name}: not orthogonal")
    if det(m) != -1:
        bad.append(f"{name}: determinant {det(m).pretty()}")
    if name == "C":
        for g, (left, right) in PRINTED_PAIRS.items():
            conj = mat_mul(mat_mul(m, PRINTED_SO4[g]), transpose(m))
            if conj != so4_matrix(pair(right, left)):
                bad.append(f"C {g} C^-1 is not the side-swapped element")
    else:
        for grp in ("G6", "G8"):
            G = build_group(grp)
            for g in G.generator_matrices:
                if mat_mul(mat_mul(m, g), transpose(m)) not in G.matrix_set:
                    bad.append(f"{name} does not normalize {grp}")
                    break
    return bad


def check_generator_fidelity() -> Check:
    c = Check(2, "generator fidelity")
    for g, (left, right) in PRINTED_PAIRS.items():
        if so4_matrix(pair(left, right)) != PRINTED_SO4[g]:
            c.failures.append(f"{g}: so4_matrix differs from the printed matrix")
    for extra in ("C", "C'"):
        c.failures.extend(printed_extension_check(extra))
    c.details["matrices"] = len(PRINTED_PAIRS) + 2
    return c


def check_molien(order: int = 14) -> Check:
    c = Check(3, "Poincare series")
    for name, even in ref.MOLIEN_EVEN.items():
        got = molien(build_group(name), order).as_ints()
        c.details[name] = got
        for k, v in enumerate(got):
            want = even[k // 2] if k % 2 == 0 else 0
            c.expect(f"{name} t^{k}", v, want)
    return c


def check_invariants(max_degree: int = 12) -> Check:
    c = Check(4, "invariant spaces")
    for name, even in ref.MOLIEN_EVEN.items():
        G = build_group(name)
        for d in range(0, max_degree + 1, 2):
            c.expect(f"dim {name}[{d}]", len(invariant_basis(G, d)), even[d // 2])
    polys = pencil_polynomials()
    c.details["conventions"] = polys.metadata
    for n, S in polys.S.items():
        if not in_span(S, invariant_basis(group_for_degree(n), n)):
            c.failures.append(f"S{n} not in the degree-{n} invariants")
    S8 = polys.S[8]
    for extra in ("C", "C'"):
        if not is_invariant(S8, [PRINTED_SO4[extra]]):
            c.failures.append(f"S8 not fixed by {extra}")
    w = witness_point()
    if quadric_power(2).evaluate(w):
        c.failures.append("Q does not vanish at the witness point")
    for n, S in polys.S.items():
        if not S.evaluate(w):
            c.failures.append(f"S{n} vanishes at the witness point")
    return c


def _is_real(pt) -> bool:
    return not any(isinstance(x, ComplexScalar) and x.im for x in pt)


def check_singular_members() -> Check:
    c = Check(5, "singular members")
    for n, table in ref.SINGULAR_MEMBERS.items():
        _, orbits = pencil_results(n)
        got = {}
        for r in orbits:
            lam = r.lam
            if not lam.is_rational():
                c.failures.append(f"n={n}: irrational lambda {lam.pretty()}")
                continue
            lam = lam.to_fraction()
            got[lam] = r.orbit_size
            cell = f"n={n} lambda={lam}"
            if r.gradient_checked != r.orbit_size:
                c.failures.append(f"{cell}: gradient checked at {r.gradient_checked}/{r.orbit_size} points")
            if r.hessian_rank != 3 or not r.is_node:
                c.failures.append(f"{cell}: Hessian rank {r.hessian_rank}")
            if any(k != 3 for k in r.spot_checks):
                c.failures.append(f"{cell}: spot-check Hessian ranks {r.spot_checks}")
            if r.orbits != 1:
                c.failures.append(f"{cell}: seeds fall into {r.orbits} orbits")
            if not all(_is_real(p) for p in r.points):
                c.failures.append(f"{cell}: non-real singular point")
        c.details[n] = {str(k): v for k, v in got.items()}
        for lam in sorted(set(table) | set(got)):
            c.expect(f"n={n} lambda={lam} nodes", got.get(lam, 0), table.get(lam, 0))
    return c


def check_fix_lines() -> Check:
    c = Check(6, "fix lines")
    for name, table in ref.FIX_LINE_COUNTS.items():
        classes = fix_lines(name)
        G = build_group(name)
        got = {cls.label: cls.size for cls in classes}
        c.details[name] = got
        for label in sorted(set(table) | set(got)):
            c.expect(f"{name} {label} lines", got.get(label, 0), table.get(label, 0))
        all_lines = frozenset().union(*(cls.lines for cls in classes))
        for cls in classes:
            if line_orbit(cls.representative_line, G.generator_matrices) != cls.lines:
                c.failures.append(f"{name} {cls.label}: not a single line orbit")
        for label, printed in PRINTED_FIX_LINES.items():
            base, _, only = label.partition("@")
            if only and only != name:
                continue
            if base not in got:
                continue
            owner = next(cls for cls in classes if cls.label == base)
            for ln in printed:
                if ln not in owner.lines:
                    where = "another class" if ln in all_lines else "no class"
                    c.failures.append(f"{name} {base}: printed line {line_str(ln)} lies in {where}")
        inter = class_intersections(name)
        c.details[f"{name} intersections"] = {"pairs": inter["pairs"], "meeting": inter["meeting"]}
        for a, b in inter["violations"]:
            c.failures.append(f"{name}: {a} meets {b} off the reals or on Q")
    return c


def check_audits() -> Check:
    c = Check(7, "Wronskian audits and base locus")
    for n in sorted(ref.SINGULAR_MEMBERS):
        pencil, orbits = pencil_results(n)
        audits = audit_all_lines(pencil, orbits)
        labels = {cls.label for cls in fix_lines(pencil.group.name)}
        if {a.label for a in audits} != labels:
            c.failures.append(f"n={n}: audits do not cover every fix-line class")
        for a in audits:
            cell = f"n={n} {a.label}"
            if not a.complete:
                c.failures.append(f"{cell}: remainder of degree {a.remainder_degree}")
            elif not a.ok:
                c.failures.append(f"{cell}: factor multiplicities {a.factor_multiplicities}, "
                                  f"points {a.points_per_member}, bound {a.bound}")
        base = base_locus(n)
        c.details[n] = {"base_lines": base["total_lines"], "reduced": base["reduced"]}
        for ruling in ("v", "w"):
            c.expect(f"n={n} ruling {ruling} gcd degree", base[ruling]["gcd_degree"], n)
            if not base[ruling]["squarefree"]:
                c.failures.append(f"n={n} ruling {ruling}: gcd not squarefree")
    return c


def check_configurations() -> Check:
    c = Check(8, "configurations")
    got = {}
    for n in sorted(ref.SINGULAR_MEMBERS):
        pencil, orbits = pencil_results(n)
        for r in configurations(pencil, orbits):
            key = (r.label, n, r.member.lam.to_fraction())
            got[key] = (r.lines, r.points_per_line, r.points, r.lines_per_point)
            if not r.balanced:
                c.failures.append(f"{r.label} n={n} lambda={key[2]}: p*lambda != l*pi")
    c.details["rows"] = len(got)
    for key, want in ref.CONFIGURATIONS.items():
        c.expect(f"{key[0]} n={key[1]} lambda={key[2]}", got.get(key), want)
    # unprinted rows must repeat a printed row for the same member
    for key, row in got.items():
        if key in ref.CONFIGURATIONS:
            continue
        twins = [k for k, v in ref.CONFIGURATIONS.items() if k[1:] == key[1:] and v == row]
        if not twins:
            c.failures.append(f"{key[0]} n={key[1]} lambda={key[2]}: unexpected row {row}")
    return c


def check_bounds() -> Check:
    c = Check(9, "bounds")
    for n, (naive, generic) in ref.BOUNDS.items():
        b = bound_report(n)
        c.expect(f"n={n} naive bound", b["naive_bound"], naive)
        c.expect(f"n={n} generic orbit", b["generic_orbit"], generic)
        c.expect(f"n={n} generic orbit (closed)", b["generic_orbit_computed"], generic)
        if n == 12:
            c.expect("n=12 context", b.get("context"), ref.MU12_CONTEXT)
    return c


def check_render(grid: int = 128, size: int = 128) -> Check:
    c = Check(10, "render")
    pencil = build_pencil(12)
    F = pencil.polynomial(PencilMember.from_lambda(Fraction(-22, 243)))
    scene = RenderScene(F, grid=grid, width=size, height=size)
    blobs = []
    with tempfile.TemporaryDirectory() as tmp:
        for threads in (1, 4):
            m = mesh(scene, threads=threads)
            img = raster(scene, threads=threads)
            obj, ppm = os.path.join(tmp, f"m{threads}.obj"), os.path.join(tmp, f"i{threads}.ppm")
            write_obj(obj, m)
            write_ppm(ppm, img)
            with open(obj, "rb") as fo, open(ppm, "rb") as fp:
                blobs.append((fo.read(), fp.read()))
            if threads == 1:
                c.details["vertices"] = int(len(m.vertices))
                c.details["faces"] = int(len(m.faces))
                c.details["foreground"] = round(foreground_fraction(img), 4)
                if m.empty:
                    c.failures.append("mesh is empty")
                if not m.within_tolerance():
                    c.failures.append("vertex residuals exceed 1e-6 (|grad F| + 1)")
                if c.details["foreground"] <= 0.01:
                    c.failures.append("image is (almost) all background")
    if blobs[0][0] != blobs[1][0]:
        c.failures.append("mesh differs between 1 and 4 threads")
    if blobs[0][1] != blobs[1][1]:
        c.failures.append("image differs between 1 and 4 threads")
    return c


CRITERIA = {
    1: check_group_orders,
    2: check_generator_fidelity,
    3: check_molien,
    4: check_invariants,
    5: check_singular_members,
    6: check_fix_lines,
    7: check_audits,
    8: check_configurations,
    9: check_bounds,
    10: check_render,
}


def run_checks(which=None) -> list[Check]:
    return [CRITERIA[k]() for k in sorted(which or CRITERIA)]
