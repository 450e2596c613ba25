"""Exact reconstruction of the bi-polyhedral groups H, G6, G8, G12, their
invariant pencils S_n + lambda Q^(n/2), and the nodal members of those pencils."""

from .binary import BinaryForm
from .fixlines import FixLineClass, class_intersections, fix_lines
from .groups import FiniteGroup, build_group, extend_by_matrices, pair, so4_matrix
from .invariants import invariant_basis, pencil_polynomials
from .molien import PowerSeries, molien
from .pencil import (Pencil, PencilMember, audit_all_lines, base_locus, bound_report, build_pencil,
                     configurations, singular_orbits)
from .poly import MultiPoly, quadric
from .scalar import ComplexScalar, ExactScalar, parse_exact

__version__ = "0.1.0"

__all__ = [
    "BinaryForm", "ComplexScalar", "ExactScalar", "FiniteGroup", "FixLineClass", "MultiPoly",
    "Pencil", "PencilMember", "PowerSeries", "audit_all_lines", "base_locus", "bound_report",
    "build_group", "build_pencil", "class_intersections", "configurations", "extend_by_matrices",
    "fix_lines", "invariant_basis", "molien", "pair", "pencil_polynomials", "parse_exact", "quadric",
    "singular_orbits", "so4_matrix",
]
