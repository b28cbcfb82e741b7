"""Dense exact linear algebra over Q on plain lists of lists of Fractions.

Matrices are ``list[list[Fraction]]`` in row-major order.  A matrix with zero
rows but a known column count cannot be expressed that way, so functions that
care take an explicit ``ncols``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list  # list[list[Fraction]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def to_fractions(m: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in m]


def transpose(m: Matrix, ncols: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Matrix, b: Matrix, ncols: int | None = None) -> Matrix:
    """Product of an r×k and k×c matrix.  ``ncols`` is needed when ``b`` has no rows."""
    if ncols is None:
        ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * ncols
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j in range(ncols):
                    if brow[j]:
                        acc[j] += x * brow[j]
        out.append(acc)
    return out


def matvec(a: Matrix, v: Sequence[Fraction]) -> list:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def rref(m: Matrix, ncols: int | None = None) -> tuple[Matrix, list]:
    """Reduced row echelon form and pivot columns.  Zero rows are dropped."""
    rows = [list(r) for r in m]
    ncols = len(rows[0]) if rows else (ncols or 0)
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix, ncols: int | None = None) -> list:
    """Basis of {x : m x = 0} as a list of column vectors (lists)."""
    ncols = len(m[0]) if m else (ncols or 0)
    reduced, pivots = rref(m, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[free]
        basis.append(v)
    return basis


def column_space_basis(cols: Sequence[Sequence[Fraction]], dim: int) -> list:
    """Reduced basis (as vectors) of the span of ``cols`` inside Q^dim."""
    reduced, _ = rref([list(c) for c in cols], dim)
    return reduced


def complement_basis(subspace_rows: Sequence[Sequence[Fraction]], dim: int) -> list:
    """Standard basis vectors at the non-pivot positions of the subspace's RREF.

    They span a complement of the subspace; the choice is deterministic.
    """
    _, pivots = rref([list(r) for r in subspace_rows], dim)
    chosen = set(pivots)
    out = []
    for k in range(dim):
        if k not in chosen:
            e = [Fraction(0)] * dim
            e[k] = Fraction(1)
            out.append(e)
    return out


def solve_in_span(basis_cols: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> list:
    """Coordinates of ``target`` in the (independent) columns ``basis_cols``."""
    k = len(basis_cols)
    n = len(target)
    augmented = [[basis_cols[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    reduced, pivots = rref(augmented, k + 1)
    if k in pivots:
        raise ValueError("target not in span")
    coords = [Fraction(0)] * k
    for row, p in zip(reduced, pivots):
        coords[p] = row[k]
    return coords


def det(m: Matrix) -> Fraction:
    n = len(m)
    rows = [list(r) for r in m]
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            result = -result
        p = rows[c][c]
        result *= p
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / p
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    augmented = [list(row) + e for row, e in zip(m, identity(n))]
    reduced, pivots = rref(augmented, 2 * n)
    if pivots[:n] != list(range(n)) or len(reduced) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in reduced]


def block_diag(blocks: Sequence[tuple[Matrix, int, int]]) -> Matrix:
    """Block diagonal matrix from (matrix, rows, cols) triples."""
    total_cols = sum(c for _, _, c in blocks)
    out = []
    offset = 0
    for mat, r, c in blocks:
        for i in range(r):
            row = [Fraction(0)] * total_cols
            row[offset:offset + c] = mat[i]
            out.append(row)
        offset += c
    return out


def sparse_nullspace(rows, ncols: int) -> list:
    """Kernel basis for a system given as sparse rows ``{column: Fraction}``.

    Pivot rows are kept fully reduced as rows arrive, so the free columns
    read off directly at the end.
    """
    pivot_rows: dict = {}
    for raw in rows:
        row = {c: Fraction(x) for c, x in raw.items() if x}
        while True:
            hit = next((c for c in row if c in pivot_rows), None)
            if hit is None:
                break
            f = row[hit]
            for c, x in pivot_rows[hit].items():
                value = row.get(c, 0) - f * x
                if value:
                    row[c] = value
                else:
                    row.pop(c, None)
        if not row:
            continue
        pivot = min(row)
        inv = 1 / row[pivot]
        row = {c: x * inv for c, x in row.items()}
        for p, prow in pivot_rows.items():
            f = prow.get(pivot)
            if f:
                for c, x in row.items():
                    value = prow.get(c, 0) - f * x
                    if value:
                        prow[c] = value
                    else:
                        prow.pop(c, None)
        pivot_rows[pivot] = row
    basis = []
    for free in range(ncols):
        if free in pivot_rows:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for p, prow in pivot_rows.items():
            x = prow.get(free)
            if x:
                v[p] = -x
        basis.append(v)
    return basis
