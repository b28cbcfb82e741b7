"""Colored bound quivers and the gentle algebras kQ/I_c they define.

Paths are written right-to-left: for arrows a, b with ha = tb the
composite "b after a" is the path ``ba``.  A :class:`Path` stores its arrows
in traversal order, so ``Path(tail, ("a", "b"))`` is that composite.

The quiver file format is line oriented::

    quiver <name>
    vertex <id>
    arrow <name> <tail-id> <head-id> <color>

with ``#`` starting a comment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    AcyclicityError,
    ColoringError,
    DimensionError,
    GentleAxiomError,
    QuiverSyntaxError,
)


@dataclass(frozen=True)
class Arrow:
    name: str
    tail: str
    head: str
    color: str


@dataclass(frozen=True)
class Path:
    tail: str
    arrows: tuple = ()
    head: str = ""

    def __post_init__(self):
        if not self.head:
            object.__setattr__(self, "head", self.tail)

    def __len__(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        if not self.arrows:
            return f"e_{self.tail}"
        return "*".join(reversed(self.arrows))


@dataclass(frozen=True)
class ColoredQuiver:
    name: str
    vertices: tuple
    arrows: tuple  # of Arrow

    @cached_property
    def arrow_index(self) -> dict:
        return {a.name: a for a in self.arrows}

    def arrow(self, name: str) -> Arrow:
        try:
            return self.arrow_index[name]
        except KeyError:
            raise DimensionError(f"unknown arrow {name!r}") from None

    @cached_property
    def colors(self) -> tuple:
        return tuple(sorted({a.color for a in self.arrows}))

    @cached_property
    def _incidence(self) -> tuple[dict, dict]:
        ins = {v: [] for v in self.vertices}
        outs = {v: [] for v in self.vertices}
        for a in self.arrows:
            outs[a.tail].append(a)
            ins[a.head].append(a)
        return ins, outs

    def in_arrows(self, v: str) -> list:
        return self._incidence[0][v]

    def out_arrows(self, v: str) -> list:
        return self._incidence[1][v]

    def colors_at(self, v: str) -> tuple:
        """Colors incident to ``v``, sorted by name."""
        return tuple(sorted({a.color for a in self.in_arrows(v) + self.out_arrows(v)}))


@dataclass(frozen=True)
class GentleAlgebra:
    """A triangular gentle algebra A = kQ/I_c, validated at construction."""

    quiver: ColoredQuiver
    relations: tuple = field(default=())  # (a, b) arrow-name pairs, ha = tb, same color

    def __post_init__(self):
        q = self.quiver
        computed = _monochromatic_pairs(q)
        if self.relations and set(self.relations) != set(computed):
            raise ColoringError("relations must be exactly the monochromatic composable pairs")
        object.__setattr__(self, "relations", tuple(computed))
        _check_acyclic(q)
        _check_gentle_axioms(q, set(self.relations))
        _check_coloring(q)

    @classmethod
    def from_arrows(cls, arrows: Iterable, vertices: Iterable[str] | None = None,
                    name: str = "Q") -> "GentleAlgebra":
        """Build from (name, tail, head, color) tuples; vertices default to order of use."""
        arrows = tuple(Arrow(*a) for a in arrows)
        if vertices is None:
            seen: list = []
            for a in arrows:
                for v in (a.tail, a.head):
                    if v not in seen:
                        seen.append(v)
            vertices = seen
        vertices = tuple(str(v) for v in vertices)
        for a in arrows:
            for v in (a.tail, a.head):
                if v not in vertices:
                    raise DimensionError(f"arrow {a.name} uses undeclared vertex {v!r}")
        return cls(ColoredQuiver(name, vertices, arrows))

    # convenience views ------------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self.quiver.vertices

    @property
    def arrows(self) -> tuple:
        return self.quiver.arrows

    def arrow(self, name: str) -> Arrow:
        return self.quiver.arrow(name)

    @cached_property
    def relation_set(self) -> frozenset:
        return frozenset(self.relations)

    def is_relation(self, a: str, b: str) -> bool:
        """True iff the composite ``ba`` (a then b) lies in I_c."""
        return (a, b) in self.relation_set

    @cached_property
    def color_paths(self) -> dict:
        """Color -> its arrows in path order."""
        return {s: _color_path(self.quiver, s) for s in self.quiver.colors}

    @cached_property
    def topological_order(self) -> tuple:
        return _topological_order(self.quiver)

    def vector(self, values: Mapping[str, int] | None = None, kind: str = "dimension vector",
               nonnegative: bool = True) -> dict:
        """Normalize a vertex-indexed mapping: unknown keys rejected, missing keys 0."""
        values = dict(values or {})
        unknown = [k for k in values if k not in self.vertices]
        if unknown:
            raise DimensionError(f"{kind} names unknown vertices {unknown}")
        out = {v: int(values.get(v, 0)) for v in self.vertices}
        if nonnegative and any(x < 0 for x in out.values()):
            raise DimensionError(f"{kind} must be nonnegative")
        return out

    def arrow_vector(self, values: Mapping[str, int] | None = None) -> dict:
        values = dict(values or {})
        unknown = [k for k in values if k not in self.quiver.arrow_index]
        if unknown:
            raise DimensionError(f"rank function names unknown arrows {unknown}")
        out = {a.name: int(values.get(a.name, 0)) for a in self.arrows}
        if any(x < 0 for x in out.values()):
            raise DimensionError("rank function must be nonnegative")
        return out

    # paths -------------------------------------------------------------------

    def extend(self, path: Path, arrow: str) -> Path | None:
        """``arrow * path`` if it avoids I_c, else None."""
        a = self.arrow(arrow)
        if a.tail != path.head:
            return None
        if path.arrows and self.is_relation(path.arrows[-1], arrow):
            return None
        return Path(path.tail, path.arrows + (arrow,), a.head)

    def concat(self, first: Path, then: Path) -> Path | None:
        """The path ``first`` followed by ``then``; None if zero in A."""
        if first.head != then.tail:
            return None
        if first.arrows and then.arrows and self.is_relation(first.arrows[-1], then.arrows[0]):
            return None
        return Path(first.tail, first.arrows + then.arrows, then.head)

    def paths_from(self, x: str) -> tuple:
        """All nonzero paths of A starting at ``x``, shortest first."""
        return self._paths_from[x]

    @cached_property
    def _paths_from(self) -> dict:
        table = {}
        for x in self.vertices:
            layer = [Path(x)]
            found = []
            while layer:
                found.extend(layer)
                nxt = []
                for p in layer:
                    for a in self.quiver.out_arrows(p.head):
                        q = self.extend(p, a.name)
                        if q is not None:
                            nxt.append(q)
                layer = nxt
            table[x] = tuple(found)
        return table

    def paths_between(self, x: str, y: str) -> tuple:
        return tuple(p for p in self.paths_from(x) if p.head == y)


# parsing -------------------------------------------------------------------


def parse_quiver(text: str) -> GentleAlgebra:
    name = "Q"
    named = False
    vertices: list = []
    arrows: list = []
    arrow_names: set = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        col = raw.index(tokens[0]) + 1
        keyword, args = tokens[0], tokens[1:]
        if keyword == "quiver":
            if named:
                raise QuiverSyntaxError("duplicate 'quiver' declaration", lineno, col)
            if len(args) != 1:
                raise QuiverSyntaxError("expected: quiver <name>", lineno, col)
            name, named = args[0], True
        elif keyword == "vertex":
            if len(args) != 1:
                raise QuiverSyntaxError("expected: vertex <id>", lineno, col)
            if args[0] in vertices:
                raise QuiverSyntaxError(f"duplicate vertex {args[0]!r}", lineno, col)
            vertices.append(args[0])
        elif keyword == "arrow":
            if len(args) != 4:
                raise QuiverSyntaxError("expected: arrow <name> <tail-id> <head-id> <color>", lineno, col)
            aname, tail, head, color = args
            if aname in arrow_names:
                raise QuiverSyntaxError(f"duplicate arrow {aname!r}", lineno, col)
            for v in (tail, head):
                if v not in vertices:
                    vcol = raw.index(v, col + len(keyword)) + 1
                    raise QuiverSyntaxError(f"vertex {v!r} used before declaration", lineno, vcol)
            arrow_names.add(aname)
            arrows.append(Arrow(aname, tail, head, color))
        else:
            raise QuiverSyntaxError(f"unknown keyword {keyword!r}", lineno, col)
    return GentleAlgebra(ColoredQuiver(name, tuple(vertices), tuple(arrows)))


def format_quiver(algebra: GentleAlgebra) -> str:
    q = algebra.quiver
    lines = [f"quiver {q.name}"]
    lines += [f"vertex {v}" for v in q.vertices]
    lines += [f"arrow {a.name} {a.tail} {a.head} {a.color}" for a in q.arrows]
    return "\n".join(lines) + "\n"


# validation ----------------------------------------------------------------


def _monochromatic_pairs(q: ColoredQuiver) -> list:
    order = {}
    for s in q.colors:
        arrows = [a for a in q.arrows if a.color == s]
        # position along the path where it is one; otherwise file order
        order.update({a.name: (s, k) for k, a in enumerate(_try_color_path(q, s) or arrows)})
    pairs = [
        (a.name, b.name)
        for a in q.arrows
        for b in q.out_arrows(a.head)
        if a.color == b.color
    ]
    return sorted(pairs, key=lambda ab: order[ab[0]])


def _topological_order(q: ColoredQuiver) -> tuple:
    indegree = {v: 0 for v in q.vertices}
    for a in q.arrows:
        indegree[a.head] += 1
    ready = [v for v in q.vertices if indegree[v] == 0]
    position = {v: k for k, v in enumerate(q.vertices)}
    order = []
    while ready:
        ready.sort(key=position.get)
        v = ready.pop(0)
        order.append(v)
        for a in q.out_arrows(v):
            indegree[a.head] -= 1
            if indegree[a.head] == 0:
                ready.append(a.head)
    return tuple(order)


def _check_acyclic(q: ColoredQuiver) -> None:
    order = _topological_order(q)
    if len(order) != len(q.vertices):
        stuck = [v for v in q.vertices if v not in order]
        raise AcyclicityError(f"quiver has an oriented cycle through vertices {stuck}")


def _check_gentle_axioms(q: ColoredQuiver, relations: set) -> None:
    for v in q.vertices:
        ins, outs = q.in_arrows(v), q.out_arrows(v)
        if len(ins) > 2:
            raise GentleAxiomError(1, v, [a.name for a in ins], "more than two arrows end here")
        if len(outs) > 2:
            raise GentleAxiomError(1, v, [a.name for a in outs], "more than two arrows start here")
    for b in q.arrows:
        before = q.in_arrows(b.tail)
        after = q.out_arrows(b.head)
        free_before = [a.name for a in before if (a.name, b.name) not in relations]
        free_after = [c.name for c in after if (b.name, c.name) not in relations]
        if len(free_before) > 1:
            raise GentleAxiomError(2, b.tail, [b.name] + free_before,
                                   f"several arrows compose with {b.name} outside I")
        if len(free_after) > 1:
            raise GentleAxiomError(2, b.head, [b.name] + free_after,
                                   f"{b.name} composes with several arrows outside I")
    for b in q.arrows:
        bound_before = [a.name for a in q.in_arrows(b.tail) if (a.name, b.name) in relations]
        bound_after = [c.name for c in q.out_arrows(b.head) if (b.name, c.name) in relations]
        if len(bound_before) > 1:
            raise GentleAxiomError(3, b.tail, [b.name] + bound_before,
                                   f"several relations end with {b.name}")
        if len(bound_after) > 1:
            raise GentleAxiomError(3, b.head, [b.name] + bound_after,
                                   f"several relations start with {b.name}")
    # axiom (4) holds by construction: I_c is generated by length-2 paths


def _try_color_path(q: ColoredQuiver, s: str) -> list | None:
    arrows = [a for a in q.arrows if a.color == s]
    heads = {a.head for a in arrows}
    starts = [a for a in arrows if a.tail not in heads]
    if len(starts) != 1:
        return None
    path = [starts[0]]
    while True:
        nxt = [a for a in arrows if a.tail == path[-1].head]
        if len(nxt) > 1:
            return None
        if not nxt:
            break
        path.append(nxt[0])
        if len(path) > len(arrows):
            return None
    return path if len(path) == len(arrows) else None


def _color_path(q: ColoredQuiver, s: str) -> tuple:
    path = _try_color_path(q, s)
    if path is None:
        names = [a.name for a in q.arrows if a.color == s]
        raise ColoringError(f"arrows of color {s!r} ({', '.join(names)}) do not form a directed path")
    return tuple(path)


def _check_coloring(q: ColoredQuiver) -> None:
    for s in q.colors:
        _color_path(q, s)


# numerical invariants --------------------------------------------------------


def relation_pairs(algebra: GentleAlgebra) -> list:
    return list(algebra.relations)


def ext_dimensions(algebra: GentleAlgebra) -> list:
    """``E[l][(i, j)]`` = dim Ext^l(S_i, S_j), counted as chains of length l.

    A chain of length l from i to j is an arrow sequence a_1, ..., a_l from i
    to j in which every consecutive pair is a relation pair.
    """
    vertices = algebra.vertices
    layers = [{(v, v): 1 for v in vertices}]
    # chains ending in a given arrow, keyed by (start vertex, last arrow)
    current = {(a.tail, a.name): 1 for a in algebra.arrows}
    while current:
        layer: dict = {}
        for (start, last), count in current.items():
            key = (start, algebra.arrow(last).head)
            layer[key] = layer.get(key, 0) + count
        layers.append(layer)
        nxt: dict = {}
        for (start, last), count in current.items():
            for b in algebra.quiver.out_arrows(algebra.arrow(last).head):
                if algebra.is_relation(last, b.name):
                    nxt[(start, b.name)] = nxt.get((start, b.name), 0) + count
        current = nxt
    return layers


def euler_form(algebra: GentleAlgebra, d: Mapping[str, int], e: Mapping[str, int]) -> int:
    d = algebra.vector(d, nonnegative=False)
    e = algebra.vector(e, nonnegative=False)
    total = 0
    for l, layer in enumerate(ext_dimensions(algebra)):
        sign = -1 if l % 2 else 1
        total += sign * sum(n * d[i] * e[j] for (i, j), n in layer.items())
    return total


def weight_pairing(theta: Mapping[str, int], d: Mapping[str, int]) -> int:
    return sum(theta.get(v, 0) * x for v, x in d.items())
