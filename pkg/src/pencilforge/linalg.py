"""Exact dense linear algebra over ExactScalar / ComplexScalar (or any exact field type).

Matrices are tuples of row tuples.  Nothing here assumes a particular scalar
class beyond ``+ - * /`` and truthiness meaning "nonzero".
"""

from __future__ import annotations

from typing import Sequence

from .scalar import ONE, ZERO, coerce

Matrix = tuple
Vector = tuple


def identity(n: int = 4, one=ONE, zero=ZERO) -> Matrix:
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int, zero=ZERO) -> Matrix:
    return tuple(tuple(zero for _ in range(cols)) for _ in range(rows))


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    """Coerce nested int/Fraction/ExactScalar data into an ExactScalar matrix."""
    return tuple(tuple(coerce(x) for x in row) for row in rows)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = len(b[0])
    bt = tuple(zip(*b))
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        new_row = []
        for j in range(cols):
            col = bt[j]
            acc = None
            for k, x in nz:
                y = col[k]
                if y:
                    acc = x * y if acc is None else acc + x * y
            new_row.append(acc if acc is not None else row[0] * 0)
        out.append(tuple(new_row))
    return tuple(out)


def mat_vec(a: Matrix, v: Vector) -> Vector:
    out = []
    for row in a:
        acc = None
        for x, y in zip(row, v):
            if x and y:
                acc = x * y if acc is None else acc + x * y
        out.append(acc if acc is not None else row[0] * 0)
    return tuple(out)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, s) -> Matrix:
    return tuple(tuple(x * s for x in row) for row in a)


def trace(a: Matrix):
    acc = a[0][0]
    for i in range(1, len(a)):
        acc = acc + a[i][i]
    return acc


class UniPoly:
    """Univariate polynomial in t, coefficients stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        # the zero polynomial has degree -1
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            cs = c.pretty() if hasattr(c, "pretty") else str(c)
            if " " in cs:
                cs = f"({cs})"
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and cs == "1":
                terms.append(mono)
            elif mono and cs == "-1":
                terms.append(f"-{mono}")
            else:
                terms.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(terms).replace("+ -", "- ")

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not self.coeffs or not other.coeffs:
            return UniPoly([])
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    def series_inverse(self, order: int) -> list:
        """Coefficients 0..order of the power series 1/self (needs nonzero constant term)."""
        c = self.coeffs
        if not c or not c[0]:
            raise ZeroDivisionError("series inverse needs a nonzero constant term")
        inv0 = ONE / c[0]
        out = [inv0]
        for k in range(1, order + 1):
            acc = ZERO
            for j in range(1, min(k, len(c) - 1) + 1):
                if c[j]:
                    acc = acc + c[j] * out[k - j]
            out.append(-acc * inv0)
        return out


def charpoly(m: Matrix) -> UniPoly:
    """det(m - t*id) via Faddeev-LeVerrier.

    For even size this equals det(t*id - m); for odd size the sign is flipped.
    """
    n = len(m)
    eye = identity(n)
    coeffs = [ZERO] * (n + 1)  # coefficients of det(t*I - m), low first
    coeffs[n] = ONE
    mk = zeros(n, n)
    c_prev = ONE
    for k in range(1, n + 1):
        # M_k = m @ (M_{k-1} + c_{n-k+1} I)
        inner = mat_add(mk, mat_scale(eye, c_prev)) if k > 1 else eye
        mk = mat_mul(m, inner)
        c = -trace(mk) / k
        coeffs[n - k] = c
        c_prev = c
    if n % 2:
        coeffs = [-x for x in coeffs]
    return UniPoly(coeffs)


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns.  Leading entries are 1."""
    mat = [[coerce(x) for x in r] for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r >= len(mat):
            break
        piv = None
        for i in range(r, len(mat)):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        prow = [x * inv if x else x for x in mat[r]]
        prow[col] = prow[col] * 0 + 1
        mat[r] = prow
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                row = mat[i]
                mat[i] = [x - f * y if y else x for x, y in zip(row, prow)]
        pivots.append(col)
        r += 1
    return mat[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    """Rank by fraction-free (Bareiss) elimination."""
    mat = [[coerce(x) for x in r] for r in rows]
    if not mat:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    prev = None
    r = 0
    for col in range(ncols):
        if r >= nrows:
            break
        piv = next((i for i in range(r, nrows) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        p = mat[r][col]
        for i in range(r + 1, nrows):
            f = mat[i][col]
            row = mat[i]
            new = []
            for j in range(ncols):
                v = p * row[j]
                if f and mat[r][j]:
                    v = v - f * mat[r][j]
                if prev is not None and v:
                    v = v / prev
                new.append(v)
            mat[i] = new
        prev = p
        r += 1
    return r


def det(m: Matrix):
    """Determinant by Bareiss elimination (exact division at every step)."""
    mat = [[coerce(x) for x in r] for r in m]
    n = len(mat)
    sign = 1
    prev = None
    for k in range(n - 1):
        if not mat[k][k]:
            swap = next((i for i in range(k + 1, n) if mat[i][k]), None)
            if swap is None:
                return mat[0][0] * 0
            mat[k], mat[swap] = mat[swap], mat[k]
            sign = -sign
        p = mat[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = p * mat[i][j] - mat[i][k] * mat[k][j]
                mat[i][j] = v / prev if prev is not None else v
        prev = p
    d = mat[n - 1][n - 1]
    return d if sign > 0 else -d


def kernel(rows: Sequence[Sequence]) -> list[tuple]:
    """Null-space basis, canonical: reduced row echelon with leading entry 1."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    zero = coerce(rows[0][0]) * 0
    one = zero + 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [zero] * ncols
        v[fcol] = one
        for r, pcol in enumerate(pivots):
            if red[r][fcol]:
                v[pcol] = -red[r][fcol]
        basis.append(v)
    if not basis:
        return []
    canon, _ = rref(basis)
    return [tuple(v) for v in canon]


def span_canonical(vectors: Sequence[Sequence]) -> tuple[tuple, ...]:
    """Canonical spanning matrix (RREF, zero rows dropped) of a subspace."""
    red, _ = rref(vectors)
    return tuple(tuple(r) for r in red)
