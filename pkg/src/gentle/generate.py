"""Random triangular gentle algebras, dimension vectors and modules.

Used by the property tests and the fixture search; all randomness flows
through an explicit :class:`random.Random`.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .errors import GentleError
from .exact import linalg
from .quiver import GentleAlgebra
from .rank import regular_rank_function
from .representation import Representation


def random_gentle_algebra(rng: random.Random, max_vertices: int = 6, max_colors: int = 5,
                          attempts: int = 200) -> GentleAlgebra:
    """Colors are increasing vertex chains; a vertex lies on at most two of them."""
    for _ in range(attempts):
        n = rng.randint(2, max_vertices)
        vertices = [str(k + 1) for k in range(n)]
        load = {v: 0 for v in vertices}
        arrows = []
        for c in range(rng.randint(1, max_colors)):
            free = [k for k in range(n) if load[vertices[k]] < 2]
            if len(free) < 2:
                break
            length = rng.randint(2, min(len(free), 4))
            chain = sorted(rng.sample(free, length))
            color = chr(ord("a") + c)
            for k, (x, y) in enumerate(zip(chain, chain[1:]), start=1):
                arrows.append((f"{color}{k}", vertices[x], vertices[y], color))
            for k in chain:
                load[vertices[k]] += 1
        if not arrows:
            continue
        used = sorted({v for a in arrows for v in a[1:3]}, key=int)
        try:
            return GentleAlgebra.from_arrows(arrows, vertices=used, name="random")
        except GentleError:
            continue
    raise RuntimeError("could not generate a gentle algebra")


def regular_dimension_vectors(A: GentleAlgebra, max_dim: int = 4, nonzero: bool = True):
    """Every d with entries <= max_dim admitting a regular rank function, with it."""
    for values in itertools.product(range(max_dim + 1), repeat=len(A.vertices)):
        if nonzero and not any(values):
            continue
        d = dict(zip(A.vertices, values))
        r = regular_rank_function(A, d)
        if r is not None:
            yield d, r


def _random_fraction(rng: random.Random, spread: int = 3) -> Fraction:
    return Fraction(rng.randint(-spread, spread), rng.randint(1, 2))


def _random_matrix(rng: random.Random, rows: int, cols: int, density: float) -> list:
    return [[_random_fraction(rng) if rng.random() < density else Fraction(0) for _ in range(cols)]
            for _ in range(rows)]


def random_representation(A: GentleAlgebra, d: dict, rng: random.Random,
                          density: float = 0.6) -> Representation:
    """A random module of dimension vector d satisfying every relation.

    Along each color path the next map is a random combination of the left
    null vectors of the previous one, so consecutive products vanish.
    """
    d = A.vector(d)
    maps = {}
    for color, path in A.color_paths.items():
        previous = None
        for a in path:
            rows, cols = d[a.head], d[a.tail]
            if previous is None:
                m = _random_matrix(rng, rows, cols, density)
            else:
                annihilator = linalg.nullspace(linalg.transpose(previous, d[a.tail]), d[a.tail]) \
                    if previous else [[Fraction(int(i == j)) for j in range(cols)] for i in range(cols)]
                coeffs = _random_matrix(rng, rows, len(annihilator), density)
                m = linalg.matmul(coeffs, annihilator, ncols=cols) if annihilator else linalg.zeros(rows, cols)
            maps[a.name] = m
            previous = m
    return Representation.from_rational(A, d, maps).check_relations()


def random_dimension_vector(A: GentleAlgebra, rng: random.Random, max_dim: int = 3) -> dict:
    return {v: rng.randint(0, max_dim) for v in A.vertices}
