"""Representations of a bound quiver: polynomial matrices per arrow."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import DimensionError, RelationError
from .exact import linalg
from .exact.matrix import PolyMatrix, block_diagonal
from .quiver import GentleAlgebra, Path


@dataclass(frozen=True)
class Representation:
    """``maps[a]`` is a d(ha) x d(ta) :class:`PolyMatrix`."""

    algebra: GentleAlgebra
    dims: Mapping[str, int]
    maps: Mapping[str, PolyMatrix]

    def __post_init__(self):
        A = self.algebra
        object.__setattr__(self, "dims", A.vector(self.dims))
        maps = {}
        for a in A.arrows:
            m = self.maps.get(a.name)
            shape = (self.dims[a.head], self.dims[a.tail])
            if m is None:
                m = PolyMatrix.zeros(*shape)
            if (m.rows, m.cols) != shape:
                raise DimensionError(
                    f"matrix for {a.name} is {m.rows}x{m.cols}, expected {shape[0]}x{shape[1]}"
                )
            maps[a.name] = m
        object.__setattr__(self, "maps", maps)

    @classmethod
    def from_rational(cls, algebra: GentleAlgebra, dims, maps: Mapping[str, list]) -> "Representation":
        dims = algebra.vector(dims)
        poly = {}
        for a in algebra.arrows:
            if a.name in maps:
                poly[a.name] = PolyMatrix.from_rows(maps[a.name], cols=dims[a.tail])
        return cls(algebra, dims, poly)

    @classmethod
    def zero(cls, algebra: GentleAlgebra) -> "Representation":
        return cls(algebra, {}, {})

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def variables(self) -> tuple:
        names: list = []
        for m in self.maps.values():
            for v in m.variables():
                if v not in names:
                    names.append(v)
        return tuple(names)

    def path_matrix(self, path: Path) -> PolyMatrix:
        result = PolyMatrix.identity(self.dims[path.tail])
        for name in path.arrows:
            result = self.maps[name] @ result
        return result

    def relation_violations(self) -> list:
        bad = []
        for a, b in self.algebra.relations:
            if not (self.maps[b] @ self.maps[a]).is_zero():
                bad.append((a, b))
        return bad

    def check_relations(self) -> "Representation":
        bad = self.relation_violations()
        if bad:
            raise RelationError(f"relations not satisfied: {bad}")
        return self

    def specialize(self, assignment: Mapping[str, object] | None = None) -> "RationalRep":
        assignment = {k: Fraction(v) for k, v in (assignment or {}).items()}
        maps = {a: m.specialize(assignment) for a, m in self.maps.items()}
        return RationalRep(self.algebra, dict(self.dims), maps)

    def subs(self, assignment: Mapping[str, object]) -> "Representation":
        return Representation(self.algebra, self.dims,
                              {a: m.subs(assignment) for a, m in self.maps.items()})

    def conjugate(self, g: Mapping[str, list]) -> "Representation":
        """g . M with (g.M)(a) = g(ha) M(a) g(ta)^-1 for rational invertible g."""
        inverses = {v: linalg.inverse(g[v]) if self.dims[v] else [] for v in self.algebra.vertices}
        maps = {}
        for a in self.algebra.arrows:
            left = PolyMatrix.from_rows(g[a.head], cols=self.dims[a.head]) if self.dims[a.head] else None
            right = PolyMatrix.from_rows(inverses[a.tail], cols=self.dims[a.tail]) if self.dims[a.tail] else None
            m = self.maps[a.name]
            if left is not None and right is not None:
                m = left @ m @ right
            maps[a.name] = m
        return Representation(self.algebra, self.dims, maps)


def direct_sum(*modules: Representation) -> Representation:
    if not modules:
        raise ValueError("direct_sum needs at least one summand")
    A = modules[0].algebra
    dims = {v: sum(M.dims[v] for M in modules) for v in A.vertices}
    maps = {a.name: block_diagonal([M.maps[a.name] for M in modules]) for a in A.arrows}
    return Representation(A, dims, maps)


@dataclass
class RationalRep:
    """A representation with rational matrices (lists of Fraction rows)."""

    algebra: GentleAlgebra
    dims: dict
    maps: dict

    def path_matrix(self, path: Path) -> list:
        result = linalg.identity(self.dims[path.tail])
        for name in path.arrows:
            result = linalg.matmul(self.maps[name], result, ncols=self.dims[path.tail])
        return result

    def to_representation(self) -> Representation:
        return Representation.from_rational(self.algebra, self.dims, self.maps)
