"""Projectives, Hom and Ext^1, and projective presentations over A = kQ/I_c.

Everything here works over Q after specializing band parameters, except the
band presentation, whose map F keeps its coefficients symbolic.

A projective P_x has the nonzero paths starting at x as basis.  A direct sum
of projectives is described by its list of *slots* (one vertex per summand);
its basis at y is the list of pairs (slot, path from the slot's vertex to y).
A map P_s -> P_u is right multiplication by a combination of paths from u's
vertex to s's vertex, so ``entries[(s, u)]`` holds (coefficient, path) pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import NotRegularError
from .exact import linalg
from .exact.poly import MultiPoly
from .quiver import GentleAlgebra, Path
from .rank import is_regular
from .representation import RationalRep, Representation
from .updown import (
    band_base_points,
    band_ids,
    bands,
    check_base_points,
    classify_components,
    updown_graph,
    updown_module,
)


# free modules -------------------------------------------------------------------


def free_basis(A: GentleAlgebra, slots, y: str) -> list:
    return [(u, p) for u, x in enumerate(slots) for p in A.paths_between(x, y)]


def _index(basis: list) -> dict:
    return {item: k for k, item in enumerate(basis)}


def free_arrow_action(A: GentleAlgebra, slots, arrow: str) -> list:
    """Matrix of ``arrow`` on the free module with the given slots."""
    a = A.arrow(arrow)
    source = free_basis(A, slots, a.tail)
    target = _index(free_basis(A, slots, a.head))
    m = linalg.zeros(len(target), len(source))
    for col, (u, p) in enumerate(source):
        q = A.extend(p, arrow)
        if q is not None:
            m[target[(u, q)]][col] = Fraction(1)
    return m


@dataclass
class ProjectiveModule:
    vertex: str
    basis: dict  # y -> tuple of paths
    module: Representation


def projective_module(A: GentleAlgebra, x: str) -> ProjectiveModule:
    if x not in A.vertices:
        from .errors import DimensionError

        raise DimensionError(f"unknown vertex {x!r}")
    basis = {y: A.paths_between(x, y) for y in A.vertices}
    maps = {a.name: free_arrow_action(A, (x,), a.name) for a in A.arrows}
    dims = {y: len(basis[y]) for y in A.vertices}
    return ProjectiveModule(x, basis, Representation.from_rational(A, dims, maps))


# Hom ------------------------------------------------------------------------------


@dataclass
class HomBasis:
    dim: int
    basis: list  # each element: vertex -> e(v) x d(v) rational matrix


def _rational(M, assignment=None) -> RationalRep:
    if isinstance(M, RationalRep):
        return M
    return M.specialize(assignment)


def hom_space(M, N, assignment: Mapping | None = None) -> HomBasis:
    """Basis of Hom_A(M, N) solving phi(ha) M(a) = N(a) phi(ta) exactly."""
    M, N = _rational(M, assignment), _rational(N, assignment)
    A = M.algebra
    offset, total = {}, 0
    for v in A.vertices:
        offset[v] = total
        total += N.dims[v] * M.dims[v]

    def var(v, p, q):
        return offset[v] + p * M.dims[v] + q

    rows = []
    for a in A.arrows:
        s, t = a.tail, a.head
        Ma, Na = M.maps[a.name], N.maps[a.name]
        for p in range(N.dims[t]):
            for q in range(M.dims[s]):
                row: dict = {}
                for k in range(M.dims[t]):
                    x = Ma[k][q]
                    if x:
                        c = var(t, p, k)
                        row[c] = row.get(c, 0) + x
                for k in range(N.dims[s]):
                    x = Na[p][k]
                    if x:
                        c = var(s, k, q)
                        row[c] = row.get(c, 0) - x
                if row:
                    rows.append(row)
    kernel = linalg.sparse_nullspace(rows, total)
    basis = []
    for vec in kernel:
        phi = {}
        for v in A.vertices:
            phi[v] = [[vec[var(v, p, q)] for q in range(M.dims[v])] for p in range(N.dims[v])]
        basis.append(phi)
    return HomBasis(len(basis), basis)


def hom_dim(M, N, assignment: Mapping | None = None) -> int:
    return hom_space(M, N, assignment).dim


def is_homomorphism(M, N, phi: Mapping, assignment: Mapping | None = None) -> bool:
    M, N = _rational(M, assignment), _rational(N, assignment)
    for a in M.algebra.arrows:
        left = linalg.matmul(phi[a.head], M.maps[a.name], ncols=M.dims[a.tail])
        right = linalg.matmul(N.maps[a.name], phi[a.tail], ncols=M.dims[a.tail])
        if left != right:
            return False
    return True


# presentations -------------------------------------------------------------------


@dataclass
class ProjectivePresentation:
    """P1 --F--> P0 with P0, P1 given by slot vertices."""

    algebra: GentleAlgebra
    p0: tuple
    p1: tuple
    entries: dict  # (p1 slot, p0 slot) -> tuple of (MultiPoly, Path)
    generators: tuple = ()  # image in M(p0[u]) of the generator of slot u
    minimal: bool | None = None
    labels0: tuple = ()  # optional names for slots (e.g. Γ-vertices)
    labels1: tuple = ()

    def weight(self) -> dict:
        theta = {v: 0 for v in self.algebra.vertices}
        for v in self.p0:
            theta[v] += 1
        for v in self.p1:
            theta[v] -= 1
        return theta

    def variables(self) -> tuple:
        names: list = []
        for terms in self.entries.values():
            for coeff, _ in terms:
                for v in coeff.used_variables():
                    if v not in names:
                        names.append(v)
        return tuple(names)

    def verify_minimal(self) -> bool:
        """Minimal iff no entry has a nonzero coefficient on a trivial path."""
        self.minimal = all(len(path) > 0 for terms in self.entries.values() for _, path in terms)
        return self.minimal

    def describe(self) -> list:
        lines = []
        for (s, u), terms in sorted(self.entries.items()):
            text = " + ".join(f"({c})*{p}" for c, p in terms)
            lines.append(f"P1[{s}]@{self.p1[s]} -> P0[{u}]@{self.p0[u]}: {text}")
        return lines


def presentation_matrix_at(pres: ProjectivePresentation, y: str,
                           assignment: Mapping | None = None) -> list:
    """F at vertex y as a rational matrix P1(y) -> P0(y)."""
    A = pres.algebra
    assignment = assignment or {}
    src = free_basis(A, pres.p1, y)
    dst = _index(free_basis(A, pres.p0, y))
    m = linalg.zeros(len(dst), len(src))
    for col, (s, sigma) in enumerate(src):
        for u in range(len(pres.p0)):
            for coeff, rho in pres.entries.get((s, u), ()):
                path = A.concat(rho, sigma)
                if path is None:
                    continue
                m[dst[(u, path)]][col] += coeff.evaluate(assignment)
    return m


def is_injective(pres: ProjectivePresentation, assignment: Mapping | None = None) -> bool:
    A = pres.algebra
    for y in A.vertices:
        m = presentation_matrix_at(pres, y, assignment)
        ncols = len(free_basis(A, pres.p1, y))
        if ncols and linalg.rank(m) != ncols:
            return False
    return True


def cover_matrix(A: GentleAlgebra, slots, generators, M: RationalRep, y: str) -> list:
    """P0(y) -> M(y) for the cover sending slot u's generator to generators[u]."""
    basis = free_basis(A, slots, y)
    cols = []
    for u, path in basis:
        g = generators[u]
        cols.append(linalg.matvec(M.path_matrix(path), g))
    return [[cols[j][i] for j in range(len(cols))] for i in range(M.dims[y])]


def _radical(M: RationalRep, y: str) -> list:
    images = []
    for a in M.algebra.quiver.in_arrows(y):
        m = M.maps[a.name]
        images += [[m[i][j] for i in range(M.dims[y])] for j in range(M.dims[a.tail])]
    return images


def _top_generators(M: RationalRep) -> tuple[tuple, tuple]:
    """Slots and generator vectors lifting a basis of top M = M / rad M."""
    slots, gens = [], []
    for y in M.algebra.vertices:
        for g in linalg.complement_basis(_radical(M, y), M.dims[y]):
            slots.append(y)
            gens.append(g)
    return tuple(slots), tuple(gens)


def _coordinates(basis: list, targets: list, dim: int) -> list:
    """Coordinates of each target in ``basis`` (independent vectors of length dim)."""
    k = len(basis)
    if not targets:
        return []
    augmented = [[basis[j][i] for j in range(k)] + [t[i] for t in targets] for i in range(dim)]
    reduced, pivots = linalg.rref(augmented, k + len(targets))
    if any(p >= k for p in pivots):
        raise ValueError("vector outside the subspace")
    out = []
    for t in range(len(targets)):
        coords = [Fraction(0)] * k
        for row, p in zip(reduced, pivots):
            coords[p] = row[k + t]
        out.append(coords)
    return out


@dataclass
class Cover:
    slots: tuple
    generators: tuple
    kernel_basis: dict  # y -> list of vectors in P0(y) coordinates
    kernel: RationalRep


def projective_cover(M: RationalRep) -> Cover:
    A = M.algebra
    slots, gens = _top_generators(M)
    kernel_basis = {}
    for y in A.vertices:
        n = len(free_basis(A, slots, y))
        kernel_basis[y] = linalg.nullspace(cover_matrix(A, slots, gens, M, y), n)
    maps = {}
    for a in A.arrows:
        action = free_arrow_action(A, slots, a.name)
        images = [linalg.matvec(action, k) for k in kernel_basis[a.tail]]
        dim_head = len(free_basis(A, slots, a.head))
        coords = _coordinates(kernel_basis[a.head], images, dim_head)
        maps[a.name] = [[coords[j][i] for j in range(len(coords))]
                        for i in range(len(kernel_basis[a.head]))]
    dims = {y: len(kernel_basis[y]) for y in A.vertices}
    return Cover(slots, gens, kernel_basis, RationalRep(A, dims, maps))


def minimal_presentation(M, assignment: Mapping | None = None) -> ProjectivePresentation:
    """Cover M by the projective cover of its top, then cover the kernel."""
    Mr = _rational(M, assignment)
    A = Mr.algebra
    cover = projective_cover(Mr)
    K = cover.kernel
    p1, entries = [], {}
    for y in A.vertices:
        basis0 = free_basis(A, cover.slots, y)
        for k in linalg.complement_basis(_radical(K, y), K.dims[y]):
            vector = linalg.matvec(linalg.transpose(cover.kernel_basis[y], len(basis0)), k) \
                if cover.kernel_basis[y] else []
            s = len(p1)
            p1.append(y)
            for (u, path), c in zip(basis0, vector):
                if c:
                    entries.setdefault((s, u), []).append((MultiPoly.constant(c), path))
    pres = ProjectivePresentation(A, cover.slots, tuple(p1),
                                  {key: tuple(v) for key, v in entries.items()},
                                  generators=cover.generators)
    pres.verify_minimal()
    return pres


def ext1_dim(M, N, assignment: Mapping | None = None) -> int:
    """dim Ext^1(M, N) = dim Hom(K, N) - dim Hom(P0, N) + dim Hom(M, N)."""
    Mr, Nr = _rational(M, assignment), _rational(N, assignment)
    cover = projective_cover(Mr)
    hom_p0 = sum(Nr.dims[x] for x in cover.slots)
    return hom_dim(cover.kernel, Nr) - hom_p0 + hom_dim(Mr, Nr)


def pdim_at_most_one(M, assignment: Mapping | None = None) -> bool:
    return is_injective(minimal_presentation(M, assignment))


# the band presentation -------------------------------------------------------------


def _trace_to_source(graph, inc: dict, sources: set, arrow: int) -> list:
    """Γ-arrows of the directed path ending with ``arrow`` and starting at a source."""
    chain = [arrow]
    current = graph.arrows[arrow].tail
    while current not in sources:
        prev = next(k for k in inc[current] if k != chain[0])
        chain.insert(0, prev)
        current = graph.arrows[prev].tail
    return chain


def band_presentation(A: GentleAlgebra, d: Mapping, r: Mapping, eps: Mapping | None = None,
                      theta: Mapping | None = None, lambdas: Mapping | None = None
                      ) -> ProjectivePresentation:
    """The explicit presentation of a regular up-and-down module.

    P0 has one summand per Γ-source and P1 one per Γ-sink.  A sink v gets
    the two Γ-paths l+(v), l-(v) that run from sources into v, labelled by
    the sign of the color of their last arrow at v; F sends P(v) to
    [lambda_b * l+(v); -l-(v)] when v is the base point of band b and to
    [l+(v); -l-(v)] otherwise.
    """
    d, r = A.vector(d), A.arrow_vector(r)
    if not is_regular(A, d, r):
        raise NotRegularError("band presentation needs a regular (d, r)")
    graph = updown_graph(A, d, r, eps)
    components = classify_components(graph)
    ids = band_ids(components)
    theta = band_base_points(graph, components) if theta is None else check_base_points(graph, components, theta)
    band_of = {v: ids[id(c)] for c in bands(components) for v in c.vertices}
    if lambdas is None:
        lambdas = {bid: MultiPoly.var(f"lambda_{bid}") for bid in ids.values()}
    order = {v: k for k, v in enumerate(A.vertices)}
    key = lambda v: (order[v[0]], v[1])  # noqa: E731
    sources = sorted(graph.sources(), key=key)
    sinks = sorted(graph.sinks(), key=key)
    source_slot = {v: k for k, v in enumerate(sources)}
    source_set = set(sources)
    inc = graph.incident()
    entries: dict = {}
    for s, v in enumerate(sinks):
        bid = band_of[v]
        for k in inc[v]:
            f = graph.arrows[k]
            sign = graph.eps[(v[0], A.arrow(f.arrow).color)]
            chain = _trace_to_source(graph, inc, source_set, k)
            start = graph.arrows[chain[0]].tail
            path = Path(start[0], tuple(graph.arrows[j].arrow for j in chain), v[0])
            if sign == 1:
                coeff = MultiPoly.lift(lambdas[bid]) if theta.get(bid) == v else MultiPoly.constant(1)
            else:
                coeff = MultiPoly.constant(-1)
            entries.setdefault((s, source_slot[start]), []).append((coeff, path))
    generators = []
    for v in sources:
        e = [Fraction(0)] * d[v[0]]
        e[v[1] - 1] = Fraction(1)
        generators.append(tuple(e))
    pres = ProjectivePresentation(
        A, tuple(v[0] for v in sources), tuple(v[0] for v in sinks),
        {k: tuple(v) for k, v in entries.items()}, tuple(generators),
        labels0=tuple(sources), labels1=tuple(sinks),
    )
    pres.verify_minimal()
    return pres


@dataclass
class ExactnessReport:
    surjective: bool
    composite_zero: bool
    kernel_equals_image: bool
    injective: bool
    details: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.surjective and self.composite_zero and self.kernel_equals_image and self.injective


def check_resolution(pres: ProjectivePresentation, M, assignment: Mapping | None = None) -> ExactnessReport:
    """Exactness of 0 -> P1 -> P0 -> M -> 0 via ranks at every vertex."""
    A = pres.algebra
    Mr = _rational(M, assignment)
    surjective = composite_zero = kernel_ok = injective = True
    details = []
    for y in A.vertices:
        n0 = len(free_basis(A, pres.p0, y))
        n1 = len(free_basis(A, pres.p1, y))
        pi = cover_matrix(A, pres.p0, pres.generators, Mr, y)
        F = presentation_matrix_at(pres, y, assignment)
        rank_pi = linalg.rank(pi) if Mr.dims[y] else 0
        rank_F = linalg.rank(F) if n0 and n1 else 0
        if rank_pi != Mr.dims[y]:
            surjective = False
            details.append(f"{y}: cover has rank {rank_pi} < {Mr.dims[y]}")
        if Mr.dims[y] and n1 and any(any(x for x in row) for row in linalg.matmul(pi, F, ncols=n1)):
            composite_zero = False
            details.append(f"{y}: composite P1 -> M is nonzero")
        if rank_F != n0 - rank_pi:
            kernel_ok = False
            details.append(f"{y}: image of F has rank {rank_F}, kernel has dim {n0 - rank_pi}")
        if rank_F != n1:
            injective = False
            details.append(f"{y}: F has rank {rank_F} < {n1}")
    return ExactnessReport(surjective, composite_zero, kernel_ok, injective, details)


def band_module(A: GentleAlgebra, d: Mapping, r: Mapping, eps: Mapping | None = None,
                theta: Mapping | None = None, lambdas: Mapping | None = None) -> Representation:
    """The up-and-down module matching :func:`band_presentation`'s conventions."""
    return updown_module(A, d, r, eps, theta, lambdas)
