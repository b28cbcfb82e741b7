"""Linear algebra over small prime fields F_p and subspace enumeration."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

MaxPrime = 13


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class FpMatrix:
    p: int
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples of ints in [0, p)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")
        if any(not 0 <= x < self.p for r in self.entries for x in r):
            raise ValueError("entries must be reduced mod p")

    @classmethod
    def from_rows(cls, p: int, rows, cols: int | None = None) -> "FpMatrix":
        grid = tuple(tuple(int(x) % p for x in r) for r in rows)
        return cls(p, len(grid), len(grid[0]) if grid else (cols or 0), grid)

    def apply(self, v) -> tuple:
        p = self.p
        return tuple(sum(a * b for a, b in zip(row, v)) % p for row in self.entries)

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        p = self.p
        cols = [tuple(r[j] for r in other.entries) for j in range(other.cols)]
        grid = [[sum(a * b for a, b in zip(row, col)) % p for col in cols] for row in self.entries]
        return FpMatrix.from_rows(p, grid, other.cols)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)


def rref_mod(rows, ncols: int, p: int) -> tuple[list, list]:
    """Reduced row echelon form over F_p; returns (nonzero rows, pivots)."""
    rows = [[x % p for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def fp_rank(m: FpMatrix) -> int:
    return len(rref_mod(m.entries, m.cols, m.p)[1])


def fp_kernel(m: FpMatrix) -> list:
    """Basis of the right kernel of ``m`` over F_p (length cols - rank)."""
    p = m.p
    reduced, pivots = rref_mod(m.entries, m.cols, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [0] * m.cols
        v[free] = 1
        for row, piv in zip(reduced, pivots):
            v[piv] = (-row[free]) % p
        basis.append(tuple(v))
    return basis


@lru_cache(maxsize=None)
def subspaces(n: int, p: int) -> tuple:
    """Every subspace of F_p^n, each as its RREF basis (a tuple of row tuples).

    Ordered by dimension, then by pivot set, then by the free entries.
    """
    out = []
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            # free slots: row i, column c > pivots[i] with c not a pivot
            slots = [(i, c) for i in range(k) for c in range(pivots[i] + 1, n) if c not in pivots]
            for values in itertools.product(range(p), repeat=len(slots)):
                rows = [[0] * n for _ in range(k)]
                for i, c in enumerate(pivots):
                    rows[i][c] = 1
                for (i, c), x in zip(slots, values):
                    rows[i][c] = x
                out.append(tuple(tuple(r) for r in rows))
    return tuple(out)


def gaussian_binomial(n: int, k: int, p: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def subspace_count(n: int, p: int) -> int:
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


def span_contains(basis: tuple, vectors, n: int, p: int) -> bool:
    """True iff every vector lies in the row space of ``basis`` (an RREF basis)."""
    k = len(basis)
    for v in vectors:
        if not any(v):
            continue
        if len(rref_mod(list(basis) + [list(v)], n, p)[1]) != k:
            return False
    return True


def subspaces_containing(required, n: int, p: int):
    """Every subspace of F_p^n containing the span of ``required``, as RREF bases.

    Subspaces of the quotient by R = span(required) are lifted through the
    non-pivot coordinates of R's echelon form, which is a bijection.
    """
    base, pivots = rref_mod([list(v) for v in required], n, p)
    free = [c for c in range(n) if c not in set(pivots)]
    for w in subspaces(len(free), p):
        rows = [list(r) for r in base]
        for vec in w:
            lifted = [0] * n
            for c, x in zip(free, vec):
                lifted[c] = x
            rows.append(lifted)
        reduced, _ = rref_mod(rows, n, p)
        yield tuple(tuple(r) for r in reduced)
