"""Poincare series of C[x0..x3]^G by Molien's formula, summed over classes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groups import FiniteGroup
from .linalg import UniPoly
from .scalar import ZERO


class MolienError(ArithmeticError):
    """The class sum did not come out as non-negative rational integers."""


@dataclass(frozen=True)
class PowerSeries:
    coefficients: tuple  # Fractions, index = degree
    order: int

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def as_ints(self) -> list[int]:
        return [int(c) for c in self.coefficients]

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
            terms.append(mono if c == 1 else (str(c) if k == 0 else f"{c}*{mono}"))
        return " + ".join(terms) + f" + O(t^{self.order + 1})"


def molien_from_classes(classes: list[tuple[UniPoly, int]], group_order: int, order: int) -> PowerSeries:
    """(1/|G|) * sum n_g / det(g - t id), expanded to t^order."""
    total = [ZERO] * (order + 1)
    for cp, size in classes:
        inv = cp.series_inverse(order)
        for k in range(order + 1):
            if inv[k]:
                total[k] = total[k] + inv[k] * size
    coeffs = []
    for k, c in enumerate(total):
        if not c.is_rational():
            raise MolienError(f"coefficient of t^{k} is irrational: {c}")
        q = c.to_fraction() / group_order
        if q.denominator != 1 or q < 0:
            raise MolienError(f"coefficient of t^{k} is not a non-negative integer: {q}")
        coeffs.append(q)
    return PowerSeries(tuple(coeffs), order)


def molien(G: FiniteGroup, order: int, *, use_gl4_classes: bool = True) -> PowerSeries:
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    if use_gl4_classes:
        classes = G.gl4_classes()
    else:
        classes = [(c.charpoly, c.size) for c in G.conjugacy_classes]
    return molien_from_classes(classes, G.order, order)
