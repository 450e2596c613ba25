"""Command line entry point: ``pencilforge <subcommand> [options]``.

Every subcommand prints a JSON report (schema 1) to stdout or ``--out``.
Exit codes: 0 success, 1 usage error, 2 a computed value disagrees with the
published tables (the failing cells go to stderr).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from . import reference as ref
from . import verify
from .fixlines import class_intersections, fix_lines, line_str
from .groups import DEGREES, GENERATORS, build_group
from .invariants import invariant_basis, pencil_polynomials
from .molien import molien
from .pencil import (PencilMember, audit_all_lines, base_locus, bound_report, build_pencil,
                     configurations)
from .projective import coords_str

SCHEMA = 1
GROUP_CHOICES = {"h": "H", "g6": "G6", "g8": "G8", "g12": "G12"}
log = logging.getLogger("pencilforge")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# report builders; each returns (report, failures)


def _group_report(args) -> tuple[dict, list]:
    name = GROUP_CHOICES[args.group]
    G = build_group(name)
    failures = []
    if G.order != ref.GROUP_ORDERS[name]:
        failures.append(f"|{name}|: got {G.order}, expected {ref.GROUP_ORDERS[name]}")
    gen_check = {}
    fidelity = verify.check_generator_fidelity()
    for g in GENERATORS[name]:
        bad = [f for f in fidelity.failures if f.startswith(f"{g}:")]
        gen_check[g] = not bad
        failures.extend(bad)
    classes = [{"charpoly": str(c.charpoly), "size": c.size} for c in G.conjugacy_classes]
    gl4 = [{"charpoly": str(p), "size": s} for p, s in G.gl4_classes()]
    if name == "H" and sorted(s for _, s in G.gl4_classes()) != ref.GL4_CLASS_SIZES_H:
        failures.append("H: GL4 class sizes differ from the printed list")
    return {"name": name, "order": G.order, "classes": classes, "gl4_classes": gl4,
            "generator_check": gen_check}, failures


def _molien_report(args) -> tuple[dict, list]:
    name = GROUP_CHOICES[args.group]
    coeffs = molien(build_group(name), args.trunc).as_ints()
    failures = []
    even = ref.MOLIEN_EVEN[name]
    for k, v in enumerate(coeffs):
        if k // 2 < len(even):
            want = even[k // 2] if k % 2 == 0 else 0
            if v != want:
                failures.append(f"{name} t^{k}: got {v}, expected {want}")
    return {"group": name, "truncation": args.trunc, "coefficients": coeffs}, failures


def _invariants_report(args) -> tuple[dict, list]:
    name = GROUP_CHOICES[args.group]
    if args.degree < 0 or args.degree > 24:
        raise UsageError("--degree must lie in 0..24")
    G = build_group(name)
    basis = invariant_basis(G, args.degree)
    expected = molien(G, args.degree).as_ints()[args.degree]
    failures = []
    if len(basis) != expected:
        failures.append(f"dim {name}[{args.degree}]: got {len(basis)}, Molien gives {expected}")
    report = {"group": name, "degree": args.degree, "dimension": len(basis),
              "basis": [str(P) for P in basis]}
    if name in DEGREES and DEGREES[name] == args.degree:
        report["conventions"] = pencil_polynomials().metadata
    return report, failures


def _fixlines_report(args) -> tuple[dict, list]:
    name = GROUP_CHOICES[args.group]
    classes = fix_lines(name)
    table = ref.FIX_LINE_COUNTS.get(name, {})
    failures = []
    out = []
    for cls in classes:
        out.append({
            "label": cls.label,
            "charpolys": sorted({cp for cp, _, _ in cls.member_classes}),
            "lines": cls.size,
            "elements_per_line": cls.elements_per_line,
            "sample": line_str(cls.representative_line),
        })
        want = table.get(cls.label)
        if table and want != cls.size:
            failures.append(f"{name} {cls.label}: got {cls.size} lines, expected {want}")
    inter = class_intersections(name)
    for a, b in inter["violations"]:
        failures.append(f"{name}: {a} meets {b} off the reals or on Q")
    summary = {"pairs": inter["pairs"], "meeting": inter["meeting"], "violations": len(inter["violations"])}
    return {"group": name, "classes": out, "intersections": summary}, failures


def _pencil_degree(args) -> int:
    name = GROUP_CHOICES[args.group]
    if name not in DEGREES:
        raise UsageError(f"group {args.group} carries no pencil; use g6, g8 or g12")
    return DEGREES[name]


def _audit_section(n: int, pencil, orbits) -> tuple[dict, list]:
    failures = []
    audits = []
    for a in audit_all_lines(pencil, orbits):
        audits.append({
            "class": a.label,
            "line": line_str(a.line),
            "wronskian_degree": a.wronskian_degree,
            "points": dict(sorted(a.points_per_member.items())),
            "quadric_power": a.quadric_power,
            "remainder_degree": a.remainder_degree,
            "meets_base_locus": a.meets_base_locus,
            "ok": a.ok,
        })
        if not a.ok:
            failures.append(f"n={n} {a.label}: audit remainder degree {a.remainder_degree}")
    base = base_locus(n)
    section = {"v": base["v"]["gcd_degree"], "w": base["w"]["gcd_degree"],
               "lines": base["total_lines"], "reduced": base["reduced"]}
    if not base["ok"]:
        failures.append(f"n={n} base locus: {section}")
    return {"audits": audits, "base_locus": section}, failures


def _pencil_report(args) -> tuple[dict, list]:
    n = _pencil_degree(args)
    pencil, orbits = verify.pencil_results(n)
    failures = []
    members = []
    table = ref.SINGULAR_MEMBERS[n]
    seen = {}
    for r in orbits:
        members.append({
            "lambda": r.lam.pretty(),
            "rational": r.lam.is_rational(),
            "orbit_size": r.orbit_size,
            "hessian_rank": r.hessian_rank,
            "node": r.is_node,
            "representative": coords_str(r.representative),
        })
        if r.lam.is_rational():
            seen[r.lam.to_fraction()] = r.orbit_size
    for lam in sorted(set(table) | set(seen)):
        if table.get(lam) != seen.get(lam):
            failures.append(f"n={n} lambda={lam}: got {seen.get(lam, 0)} nodes, expected {table.get(lam, 0)}")
    audit, bad = _audit_section(n, pencil, orbits)
    failures.extend(bad)
    confs = []
    for c in configurations(pencil, orbits):
        confs.append({"class": c.label, "lambda": c.member.label(), "l": c.lines, "pi": c.points_per_line,
                      "p": c.points, "lambda_lines": c.lines_per_point, "balanced": c.balanced})
        key = (c.label, n, c.member.lam.to_fraction())
        want = ref.CONFIGURATIONS.get(key)
        got = (c.lines, c.points_per_line, c.points, c.lines_per_point)
        if want is not None and want != got:
            failures.append(f"{c.label} n={n} lambda={key[2]}: got {got}, expected {want}")
    bounds = bound_report(n)
    if (bounds["naive_bound"], bounds["generic_orbit"]) != ref.BOUNDS[n]:
        failures.append(f"n={n} bounds: {bounds}")
    report = {"n": n, "members": members, **audit, "configurations": confs, "bounds": bounds}
    return report, failures


def _audit_report(args) -> tuple[dict, list]:
    n = _pencil_degree(args)
    pencil, orbits = verify.pencil_results(n)
    audit, failures = _audit_section(n, pencil, orbits)
    return {"n": n, **audit}, failures


def _parse_size(text: str) -> tuple[int, int]:
    try:
        w, h = (int(x) for x in text.lower().split("x"))
    except ValueError:
        raise UsageError(f"--size expects WxH, got {text!r}") from None
    return w, h


def _render_report(args) -> tuple[dict, list]:
    from .render import RenderScene, foreground_fraction, mesh, raster, write_obj, write_ppm

    if args.n not in ref.SINGULAR_MEMBERS:
        raise UsageError("--n must be 6, 8 or 12")
    try:
        lam = Fraction(args.lam)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--lambda expects an exact rational, got {args.lam!r}") from None
    w, h = _parse_size(args.size)
    try:
        scene = RenderScene(build_pencil(args.n).polynomial(PencilMember.from_lambda(lam)),
                            chart=args.chart, radius=args.radius, width=w, height=h, grid=args.grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = {"n": args.n, "lambda": str(lam), "chart": args.chart, "radius": args.radius,
              "size": [w, h], "grid": args.grid}
    if args.mesh_out:
        m = mesh(scene, threads=args.threads)
        write_obj(args.mesh_out, m)
        report["mesh"] = {"path": args.mesh_out, "vertices": int(len(m.vertices)), "faces": int(len(m.faces)),
                          "within_tolerance": m.within_tolerance()}
    if args.image_out:
        img = raster(scene, threads=args.threads)
        write_ppm(args.image_out, img)
        report["image"] = {"path": args.image_out, "foreground": round(foreground_fraction(img), 6)}
    if not (args.mesh_out or args.image_out):
        raise UsageError("render needs --mesh-out and/or --image-out")
    return report, []


def _all_report(args) -> tuple[dict, list]:
    failures = []
    out = []
    for c in verify.run_checks():
        log.info("criterion %d (%s): %s", c.criterion, c.name, "pass" if c.passed else "FAIL")
        out.append({"criterion": c.criterion, "name": c.name, "passed": c.passed,
                    "failures": c.failures})
        failures.extend(f"[{c.criterion}] {f}" for f in c.failures)
    return {"criteria": out}, failures


COMMANDS = {
    "group": _group_report,
    "molien": _molien_report,
    "invariants": _invariants_report,
    "fixlines": _fixlines_report,
    "pencil": _pencil_report,
    "audit": _audit_report,
    "render": _render_report,
    "all": _all_report,
}


def _env_threads() -> int:
    raw = os.environ.get("PENCILFORGE_THREADS", "1")
    try:
        return max(int(raw), 1)
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: $PENCILFORGE_THREADS or 1)")
    common.add_argument("-v", "--verbose", action="count", default=0)

    grp = _Parser(add_help=False)
    grp.add_argument("--group", choices=sorted(GROUP_CHOICES), default="g12")

    parser = _Parser(prog="pencilforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("group", parents=[common, grp], help="order, classes and generator checks")
    p = sub.add_parser("molien", parents=[common, grp], help="Poincare series of the invariant ring")
    p.add_argument("--trunc", type=int, default=14)
    p = sub.add_parser("invariants", parents=[common, grp], help="basis of invariants of one degree")
    p.add_argument("--degree", type=int, default=6)
    sub.add_parser("fixlines", parents=[common, grp], help="fix-line classes and their intersections")
    sub.add_parser("pencil", parents=[common, grp], help="singular members, audits, configurations")
    sub.add_parser("audit", parents=[common, grp], help="Wronskian audits and base locus only")
    p = sub.add_parser("render", parents=[common], help="mesh and raster image of a pencil member")
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--lambda", dest="lam", default="-22/243")
    p.add_argument("--chart", type=int, default=3)
    p.add_argument("--radius", type=float, default=4.0)
    p.add_argument("--size", default="256x256")
    p.add_argument("--grid", type=int, default=128)
    p.add_argument("--mesh-out")
    p.add_argument("--image-out")
    sub.add_parser("all", parents=[common], help="run every check against the published tables")
    return parser


def _join_lambda(argv: list) -> list:
    """Glue "--lambda -22/243" into one token; argparse would read the value as a flag."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--lambda":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--lambda={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_lambda(sys.argv[1:] if argv is None else list(argv)))
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), stream=sys.stderr,
                        format="%(levelname)s %(message)s")
    if args.threads is None:
        args.threads = _env_threads()
    elif args.threads < 1:
        parser.error("--threads must be positive")
    if getattr(args, "trunc", 0) < 0:
        parser.error("--trunc must be non-negative")
    try:
        report, failures = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))
    text = json.dumps({"schema": SCHEMA, "command": args.command, **report}, indent=2, ensure_ascii=False)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if failures:
        for f in failures:
            print(f"FAIL {f}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
