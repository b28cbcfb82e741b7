"""Up-and-down graphs, their string/band components, and generic modules."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import BandParameterError, RankFunctionError, SignFunctionError
from .exact.matrix import PolyMatrix
from .exact.poly import MultiPoly
from .quiver import GentleAlgebra
from .rank import is_rank_function
from .representation import Representation

log = logging.getLogger(__name__)


# sign functions ----------------------------------------------------------------


def incident_pairs(A: GentleAlgebra) -> list:
    return [(v, s) for v in A.vertices for s in A.quiver.colors_at(v)]


def default_sign_function(A: GentleAlgebra) -> dict:
    """+1 for the alphabetically smaller color at each vertex, -1 for the other."""
    eps = {}
    for v in A.vertices:
        colors = A.quiver.colors_at(v)
        for k, s in enumerate(colors):
            eps[(v, s)] = 1 if k == 0 else -1
    return eps


def check_sign_function(A: GentleAlgebra, eps: Mapping) -> dict:
    expected = set(incident_pairs(A))
    given = set(eps)
    if given != expected:
        missing = sorted(expected - given)
        extra = sorted(given - expected)
        raise SignFunctionError(f"sign function domain mismatch: missing {missing}, unexpected {extra}")
    for v in A.vertices:
        colors = A.quiver.colors_at(v)
        values = [eps[(v, s)] for s in colors]
        if any(x not in (1, -1) for x in values):
            raise SignFunctionError(f"signs at vertex {v} must be +1 or -1")
        if len(values) == 2 and values[0] == values[1]:
            raise SignFunctionError(f"signs at vertex {v} must differ between its two colors")
    return dict(eps)


def all_sign_functions(A: GentleAlgebra):
    """Every valid sign function (2 choices per vertex that meets a color)."""
    import itertools

    vertices = [v for v in A.vertices if A.quiver.colors_at(v)]
    for choice in itertools.product((1, -1), repeat=len(vertices)):
        eps = {}
        for v, sign in zip(vertices, choice):
            colors = A.quiver.colors_at(v)
            eps[(v, colors[0])] = sign
            if len(colors) > 1:
                eps[(v, colors[1])] = -sign
        yield eps


# the graph --------------------------------------------------------------------


@dataclass(frozen=True)
class GammaArrow:
    arrow: str
    index: int
    tail: tuple  # (vertex, j)
    head: tuple


@dataclass
class UpDownGraph:
    algebra: GentleAlgebra
    d: dict
    r: dict
    eps: dict
    vertices: list  # (vertex, j) with 1 <= j <= d(vertex)
    arrows: list  # GammaArrow

    def incident(self) -> dict:
        table = {v: [] for v in self.vertices}
        for k, f in enumerate(self.arrows):
            table[f.tail].append(k)
            table[f.head].append(k)
        return table

    def sinks(self) -> list:
        inc = self.incident()
        return [v for v in self.vertices if inc[v] and all(self.arrows[k].head == v for k in inc[v])]

    def sources(self) -> list:
        inc = self.incident()
        return [v for v in self.vertices if inc[v] and all(self.arrows[k].tail == v for k in inc[v])]


def updown_graph(A: GentleAlgebra, d: Mapping[str, int], r: Mapping[str, int],
                 eps: Mapping | None = None) -> UpDownGraph:
    d, r = A.vector(d), A.arrow_vector(r)
    check = is_rank_function(A, d, r)
    if not check:
        raise RankFunctionError("invalid rank function: " + "; ".join(check.violations))
    eps = check_sign_function(A, default_sign_function(A) if eps is None else eps)
    vertices = [(v, j) for v in A.vertices for j in range(1, d[v] + 1)]
    arrows = []
    for a in A.arrows:
        for j in range(1, r[a.name] + 1):
            if eps[(a.tail, a.color)] == 1:
                tail = (a.tail, j)
            else:
                tail = (a.tail, d[a.tail] - j + 1)
            if eps[(a.head, a.color)] == 1:
                head = (a.head, d[a.head] - j + 1)
            else:
                head = (a.head, j)
            arrows.append(GammaArrow(a.name, j, tail, head))
    graph = UpDownGraph(A, d, r, eps, vertices, arrows)
    inc = graph.incident()
    crowded = [v for v, ks in inc.items() if len(ks) > 2]
    if crowded:
        raise AssertionError(f"up-and-down graph vertices with more than two arrows: {crowded}")
    return graph


# components ---------------------------------------------------------------------


@dataclass
class GraphComponent:
    kind: str  # "string" | "band"
    vertices: tuple
    arrows: tuple  # indices into the graph's arrow list
    dim: dict
    rank: dict
    word: tuple
    walk: tuple = ()  # vertex sequence of the walk that realised ``word``

    @property
    def word_text(self) -> str:
        return " ".join(self.word)


def _walk_tokens(graph: UpDownGraph, vertices: list, arrows: list) -> tuple:
    tokens = [vertices[0][0]]
    for k, v in zip(arrows, vertices[1:]):
        f = graph.arrows[k]
        tokens.append(f.arrow if f.head == v else f.arrow + "^-1")
        tokens.append(v[0])
    return tuple(tokens)


def _trace(graph: UpDownGraph, inc: dict, start, first_arrow: int | None) -> tuple[list, list]:
    """Follow the component from ``start``; returns (vertex list, arrow list)."""
    verts, arrs = [start], []
    prev = None
    arrow = first_arrow
    current = start
    while arrow is not None:
        f = graph.arrows[arrow]
        nxt = f.head if f.tail == current else f.tail
        arrs.append(arrow)
        if nxt == start:
            break
        verts.append(nxt)
        prev, current = arrow, nxt
        arrow = next((k for k in inc[current] if k != prev), None)
    return verts, arrs


def _band_word(graph: UpDownGraph, inc: dict, cycle_vertices: list) -> tuple[tuple, tuple]:
    best = None
    for start in cycle_vertices:
        for first in inc[start]:
            verts, arrs = _trace(graph, inc, start, first)
            tokens = _walk_tokens(graph, verts + [start], arrs)[:-1]
            if best is None or tokens < best[0]:
                best = (tokens, tuple(verts))
    return best


def classify_components(graph: UpDownGraph) -> list:
    A = graph.algebra
    inc = graph.incident()
    for v, ks in inc.items():
        if len(ks) > 2:
            raise AssertionError(f"malformed up-and-down graph: {v} has {len(ks)} arrows")
    seen = set()
    components = []
    for v0 in graph.vertices:
        if v0 in seen:
            continue
        stack, comp_vertices, comp_arrows = [v0], [], set()
        seen.add(v0)
        while stack:
            v = stack.pop()
            comp_vertices.append(v)
            for k in inc[v]:
                comp_arrows.add(k)
                f = graph.arrows[k]
                for w in (f.tail, f.head):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        dim = {x: 0 for x in A.vertices}
        for v, _ in comp_vertices:
            dim[v] += 1
        rank = {a.name: 0 for a in A.arrows}
        for k in comp_arrows:
            rank[graph.arrows[k].arrow] += 1
        is_band = all(len(inc[v]) == 2 for v in comp_vertices)
        if is_band:
            word, walk = _band_word(graph, inc, comp_vertices)
            kind = "band"
        else:
            ends = [v for v in comp_vertices if len(inc[v]) < 2]
            options = []
            for end in ends:
                verts, arrs = _trace(graph, inc, end, inc[end][0] if inc[end] else None)
                options.append((_walk_tokens(graph, verts, arrs), tuple(verts)))
            word, walk = min(options)
            kind = "string"
        components.append(GraphComponent(kind, tuple(sorted(comp_vertices)), tuple(sorted(comp_arrows)),
                                         dim, rank, word, walk))
    components.sort(key=lambda c: c.word)
    return components


def bands(components: list) -> list:
    return [c for c in components if c.kind == "band"]


def band_ids(components: list) -> dict:
    """Band component -> its id "b1", "b2", ... in canonical order."""
    return {id(c): f"b{k}" for k, c in enumerate(bands(components), start=1)}


def band_base_points(graph: UpDownGraph, components: list | None = None) -> dict:
    """Band id -> the smallest Γ-sink on the band, ordered by (vertex file order, j)."""
    components = classify_components(graph) if components is None else components
    order = {v: k for k, v in enumerate(graph.algebra.vertices)}
    sinks = set(graph.sinks())
    out = {}
    for bid, comp in zip(band_ids(components).values(), bands(components)):
        candidates = [v for v in comp.vertices if v in sinks]
        out[bid] = min(candidates, key=lambda v: (order[v[0]], v[1]))
    return out


def check_base_points(graph: UpDownGraph, components: list, theta: Mapping) -> dict:
    sinks = set(graph.sinks())
    ids = band_ids(components)
    for comp in bands(components):
        bid = ids[id(comp)]
        v = theta.get(bid)
        if v is None:
            raise BandParameterError(f"no base point chosen for band {bid}")
        v = (v[0], int(v[1]))
        if v not in comp.vertices:
            raise BandParameterError(f"base point {v} does not lie on band {bid}")
        if v not in sinks:
            raise BandParameterError(f"base point {v} of band {bid} is not a sink")
    return {k: (v[0], int(v[1])) for k, v in theta.items()}


# generic decomposition -----------------------------------------------------------


@dataclass
class DecompositionEntry:
    word: tuple
    kind: str
    dim: dict
    rank: dict
    multiplicity: int

    @property
    def word_text(self) -> str:
        return " ".join(self.word)


@dataclass
class GenericDecomposition:
    entries: list
    collisions: list = field(default_factory=list)

    def transcendence_degree(self) -> int:
        return sum(e.multiplicity for e in self.entries if e.kind == "band")

    def bands(self) -> list:
        return [e for e in self.entries if e.kind == "band"]


def generic_decomposition(A: GentleAlgebra, d: Mapping[str, int], r: Mapping[str, int],
                          eps: Mapping | None = None) -> GenericDecomposition:
    components = classify_components(updown_graph(A, d, r, eps))
    grouped: dict = {}
    for c in components:
        if c.word in grouped:
            grouped[c.word].multiplicity += 1
        else:
            grouped[c.word] = DecompositionEntry(c.word, c.kind, c.dim, c.rank, 1)
    entries = list(grouped.values())
    collisions = []
    for i, e in enumerate(entries):
        for f in entries[i + 1:]:
            if e.kind == f.kind and e.dim == f.dim and e.rank == f.rank:
                collisions.append((e.word_text, f.word_text))
                log.warning("components %s and %s share (d, r) but have different words",
                            e.word_text, f.word_text)
    return GenericDecomposition(entries, collisions)


def transcendence_degree(A: GentleAlgebra, d: Mapping[str, int], r: Mapping[str, int]) -> int:
    return len(bands(classify_components(updown_graph(A, d, r))))


# up-and-down modules --------------------------------------------------------------


def band_variable(bid: str) -> str:
    return f"lambda_{bid}"


def updown_module(A: GentleAlgebra, d: Mapping[str, int], r: Mapping[str, int],
                  eps: Mapping | None = None, theta: Mapping | None = None,
                  lambdas: Mapping | None = None) -> Representation:
    """The module pi_*(M~) with one parameter per band.

    ``lambdas`` maps band ids ("b1", ...) to nonzero rationals or polynomials;
    missing bands get the indeterminate ``lambda_<id>`` when ``lambdas`` is
    None, otherwise they are an error.
    """
    graph = updown_graph(A, d, r, eps)
    components = classify_components(graph)
    ids = band_ids(components)
    theta = band_base_points(graph, components) if theta is None else check_base_points(graph, components, theta)
    band_of = {}
    for comp in bands(components):
        for v in comp.vertices:
            band_of[v] = ids[id(comp)]
    values = {}
    for bid in ids.values():
        if lambdas is None:
            values[bid] = MultiPoly.var(band_variable(bid))
            continue
        if bid not in lambdas:
            raise BandParameterError(f"no parameter given for band {bid}")
        value = lambdas[bid]
        if isinstance(value, MultiPoly):
            if value.is_zero():
                raise BandParameterError(f"band parameter for {bid} is zero")
        else:
            value = Fraction(value)
            if value == 0:
                raise BandParameterError(f"band parameter for {bid} is zero")
        values[bid] = value
    if lambdas is not None:
        unknown = set(lambdas) - set(values)
        if unknown:
            raise BandParameterError(f"parameters given for unknown bands {sorted(unknown)}")

    dims = graph.d
    grids = {a.name: [[MultiPoly() for _ in range(dims[a.tail])] for _ in range(dims[a.head])]
             for a in A.arrows}
    for f in graph.arrows:
        a = A.arrow(f.arrow)
        value = MultiPoly.constant(1)
        bid = band_of.get(f.head)
        if bid is not None and theta.get(bid) == f.head and graph.eps[(a.head, a.color)] == -1:
            value = MultiPoly.lift(values[bid])
        grids[a.name][f.head[1] - 1][f.tail[1] - 1] = value
    maps = {a.name: PolyMatrix.from_rows(grids[a.name], cols=dims[a.tail]) for a in A.arrows}
    return Representation(A, dims, maps).check_relations()
