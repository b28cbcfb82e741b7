"""Rank functions and the irreducible components mod(A, d, r) they index.

A rank function bounds the rank of every arrow.  Along a color path
a_1, ..., a_n through vertices i_0, ..., i_n the constraints are

    r(a_1) <= d(i_0),  r(a_j) + r(a_{j+1}) <= d(i_j),  r(a_n) <= d(i_n)

together with r(a) <= min(d(ta), d(ha)).  Colors never share an arrow, so
the constraint system splits into independent chains, one per color.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .quiver import GentleAlgebra


@dataclass(frozen=True)
class RankCheck:
    ok: bool
    violations: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class ComponentDescriptor:
    """Names the irreducible closed subset mod(A, d, r).

    The flags stay ``None`` until something actually checks them.
    """

    d: dict
    r: dict
    is_maximal: bool | None = None
    is_regular: bool | None = None
    is_indecomposable: bool | None = None
    notes: list = field(default_factory=list)


def _color_chain(A: GentleAlgebra, color: str, d: Mapping[str, int]) -> tuple[list, list]:
    """Arrow names and vertex dims i_0, ..., i_n along one color path."""
    arrows = A.color_paths[color]
    names = [a.name for a in arrows]
    dims = [d[arrows[0].tail]] + [d[a.head] for a in arrows]
    return names, dims


def is_rank_function(A: GentleAlgebra, d: Mapping[str, int], r: Mapping[str, int]) -> RankCheck:
    d = A.vector(d)
    r = A.arrow_vector(r)
    violations = []
    for a in A.arrows:
        bound = min(d[a.tail], d[a.head])
        if r[a.name] > bound:
            violations.append(f"r({a.name})={r[a.name]} exceeds min(d({a.tail}), d({a.head}))={bound}")
    for a, b in A.relations:
        i = A.arrow(a).head
        if r[a] + r[b] > d[i]:
            violations.append(f"r({a})+r({b})={r[a] + r[b]} exceeds d({i})={d[i]}")
    return RankCheck(not violations, tuple(violations))


def _chain_sequences(dims: list) -> Iterator[tuple]:
    """All valid rank sequences along a chain with vertex dims ``dims``."""
    n = len(dims) - 1

    def extend(prefix: list) -> Iterator[tuple]:
        k = len(prefix)
        if k == n:
            yield tuple(prefix)
            return
        bound = min(dims[k], dims[k + 1])
        if k:
            bound = min(bound, dims[k] - prefix[-1])
        for value in range(bound + 1):
            prefix.append(value)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([])


def _maximal(sequences: list) -> list:
    keep = []
    for s in sequences:
        dominated = any(t != s and all(x <= y for x, y in zip(s, t)) for t in sequences)
        if not dominated:
            keep.append(s)
    return keep


def _combine(A: GentleAlgebra, per_color: list) -> Iterator[dict]:
    names = [n for n, _ in per_color]
    for choice in itertools.product(*(seqs for _, seqs in per_color)):
        r = {a.name: 0 for a in A.arrows}
        for chain, values in zip(names, choice):
            r.update(zip(chain, values))
        yield r


def valid_rank_functions(A: GentleAlgebra, d: Mapping[str, int]) -> Iterator[dict]:
    """Every valid rank function for ``d`` (exhaustive, product over colors)."""
    d = A.vector(d)
    per_color = []
    for s in A.quiver.colors:
        names, dims = _color_chain(A, s, d)
        per_color.append((names, list(_chain_sequences(dims))))
    yield from _combine(A, per_color)


def _order_key(A: GentleAlgebra):
    return lambda r: tuple(r[a.name] for a in A.arrows)


def maximal_rank_functions(A: GentleAlgebra, d: Mapping[str, int]) -> list:
    """The antichain of maximal rank functions, sorted by rank vector in arrow order.

    Maximality in a product of independent chains is coordinatewise, so the
    maximal functions are exactly the products of per-color maximal sequences.
    """
    d = A.vector(d)
    per_color = []
    for s in A.quiver.colors:
        names, dims = _color_chain(A, s, d)
        per_color.append((names, _maximal(list(_chain_sequences(dims)))))
    return sorted(_combine(A, per_color), key=_order_key(A))


def is_maximal(A: GentleAlgebra, d: Mapping[str, int], r: Mapping[str, int]) -> bool:
    d = A.vector(d)
    r = A.arrow_vector(r)
    if not is_rank_function(A, d, r):
        return False
    for a in A.arrows:
        bumped = dict(r)
        bumped[a.name] += 1
        if is_rank_function(A, d, bumped):
            return False
    return True


def regularity_violations(A: GentleAlgebra, d: Mapping[str, int], r: Mapping[str, int]) -> list:
    """Reasons (d, r) fails to be regular; empty iff regular.

    Condition I is read with the chain ends included: r(a_1) = d(i_0) and
    r(a_n) = d(i_n) alongside the interior equalities.  Condition II asks
    every vertex meeting fewer than two colors to have dimension 0.
    """
    d = A.vector(d)
    r = A.arrow_vector(r)
    problems = []
    for s in A.quiver.colors:
        names, dims = _color_chain(A, s, d)
        values = [r[n] for n in names]
        sums = [values[0]] + [x + y for x, y in zip(values, values[1:])] + [values[-1]]
        path = A.color_paths[s]
        vertices = [path[0].tail] + [a.head for a in path]
        for v, total, dim in zip(vertices, sums, dims):
            if total != dim:
                problems.append(f"color {s} at vertex {v}: ranks sum to {total}, d={dim}")
    for v in A.vertices:
        if len(A.quiver.colors_at(v)) < 2 and d[v] != 0:
            problems.append(f"vertex {v} meets {len(A.quiver.colors_at(v))} color(s) but d={d[v]}")
    return problems


def is_regular(A: GentleAlgebra, d: Mapping[str, int], r: Mapping[str, int]) -> bool:
    return not regularity_violations(A, d, r)


def regular_rank_function(A: GentleAlgebra, d: Mapping[str, int]) -> dict | None:
    """The unique rank function making mod(A, d, r) regular, if there is one.

    Along each color path r(a_1) = d(i_0) and r(a_{j+1}) = d(i_j) - r(a_j);
    a negative step rejects outright.
    """
    d = A.vector(d)
    r = {a.name: 0 for a in A.arrows}
    for s in A.quiver.colors:
        names, dims = _color_chain(A, s, d)
        value = dims[0]
        for k, name in enumerate(names):
            if value < 0:
                return None
            r[name] = value
            value = dims[k + 1] - value
    if not is_rank_function(A, d, r) or not is_regular(A, d, r):
        return None
    return r


def alternating_color_sums(A: GentleAlgebra, d: Mapping[str, int]) -> dict:
    """Color -> sum_j (-1)^j d(i_j) along its path."""
    d = A.vector(d)
    out = {}
    for s in A.quiver.colors:
        _, dims = _color_chain(A, s, d)
        out[s] = sum(x if j % 2 == 0 else -x for j, x in enumerate(dims))
    return out


def describe_component(A: GentleAlgebra, d: Mapping[str, int], r: Mapping[str, int]) -> ComponentDescriptor:
    d, r = A.vector(d), A.arrow_vector(r)
    return ComponentDescriptor(d, r, is_maximal=is_maximal(A, d, r), is_regular=is_regular(A, d, r))
