"""Matrices of polynomials: determinants and rank after specialization."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from ..errors import DimensionError
from . import linalg
from .poly import MultiPoly

CofactorLimit = 4


@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples of MultiPoly

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionError(f"entries do not form a {self.rows}x{self.cols} grid")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None,
                  variables: Sequence[str] = ()) -> "PolyMatrix":
        grid = tuple(tuple(MultiPoly.lift(x, variables) for x in row) for row in rows)
        ncols = len(grid[0]) if grid else (cols or 0)
        return cls(len(grid), ncols, grid)

    @classmethod
    def zeros(cls, rows: int, cols: int, variables: Sequence[str] = ()) -> "PolyMatrix":
        z = MultiPoly(variables)
        return cls(rows, cols, tuple(tuple(z for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def identity(cls, n: int, variables: Sequence[str] = ()) -> "PolyMatrix":
        one, zero = MultiPoly.constant(1, variables), MultiPoly(variables)
        return cls(n, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def variables(self) -> tuple:
        names: list = []
        for row in self.entries:
            for x in row:
                for v in x.used_variables():
                    if v not in names:
                        names.append(v)
        return tuple(names)

    def unify(self) -> "PolyMatrix":
        """Put every entry over one shared variable tuple."""
        context: list = []
        for row in self.entries:
            for x in row:
                for v in x.variables:
                    if v not in context:
                        context.append(v)
        grid = tuple(tuple(x.with_variables(context) for x in row) for row in self.entries)
        return PolyMatrix(self.rows, self.cols, grid)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        grid = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = MultiPoly()
                for k in range(self.cols):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            grid.append(tuple(row))
        return PolyMatrix(self.rows, other.cols, tuple(grid))

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in addition")
        grid = tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries))
        return PolyMatrix(self.rows, self.cols, grid)

    def scale(self, factor) -> "PolyMatrix":
        grid = tuple(tuple(x * factor for x in row) for row in self.entries)
        return PolyMatrix(self.rows, self.cols, grid)

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def specialize(self, assignment: Mapping[str, object]) -> list:
        """Rational matrix obtained by evaluating every entry."""
        return [[x.evaluate(assignment) for x in row] for row in self.entries]

    def subs(self, assignment: Mapping[str, object]) -> "PolyMatrix":
        grid = tuple(tuple(x.subs(assignment) for x in row) for row in self.entries)
        return PolyMatrix(self.rows, self.cols, grid)

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.entries) + "]"


def block_diagonal(blocks: Sequence[PolyMatrix]) -> PolyMatrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    zero = MultiPoly()
    grid = []
    offset = 0
    for b in blocks:
        for row in b.entries:
            grid.append((zero,) * offset + tuple(row) + (zero,) * (cols - offset - b.cols))
        offset += b.cols
    return PolyMatrix(rows, cols, tuple(grid))


def cofactor_det(m: PolyMatrix) -> MultiPoly:
    """Laplace expansion along the first row."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    return _laplace([list(r) for r in m.unify().entries])


def _laplace(grid: list) -> MultiPoly:
    n = len(grid)
    if n == 0:
        return MultiPoly.constant(1)
    if n == 1:
        return grid[0][0]
    total = MultiPoly()
    for j, pivot in enumerate(grid[0]):
        if pivot.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in grid[1:]]
        term = pivot * _laplace(minor)
        total = total - term if j % 2 else total + term
    return total


def bareiss_det(m: PolyMatrix) -> MultiPoly:
    """Fraction-free Gaussian elimination; every division is exact."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return MultiPoly.constant(1)
    grid = [list(r) for r in m.unify().entries]
    sign = 1
    previous = MultiPoly.constant(1, grid[0][0].variables)
    for k in range(n - 1):
        if grid[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not grid[i][k].is_zero()), None)
            if swap is None:
                return MultiPoly(grid[0][0].variables)
            grid[k], grid[swap] = grid[swap], grid[k]
            sign = -sign
        pivot = grid[k][k]
        for i in range(k + 1, n):
            lead = grid[i][k]
            for j in range(k + 1, n):
                value = pivot * grid[i][j]
                if not lead.is_zero() and not grid[k][j].is_zero():
                    value = value - lead * grid[k][j]
                grid[i][j] = value.exquo(previous) if not value.is_zero() else value
            grid[i][k] = MultiPoly(pivot.variables)
        previous = pivot
    result = grid[n - 1][n - 1]
    return -result if sign < 0 else result


def poly_det(m: PolyMatrix) -> MultiPoly:
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    if m.rows <= CofactorLimit:
        return cofactor_det(m)
    return bareiss_det(m)


def poly_rank_at(m: PolyMatrix, assignment: Mapping[str, object]) -> int:
    return linalg.rank(m.specialize({k: Fraction(v) for k, v in assignment.items()}))
