from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest

from gentle.quiver import GentleAlgebra, parse_quiver

ROOT = Path(__file__).resolve().parents[1]
QUIVERS = ROOT / "quivers"


def load(name: str) -> GentleAlgebra:
    return parse_quiver((QUIVERS / f"{name}.quiver").read_text())


def vec(A: GentleAlgebra, values) -> dict:
    return dict(zip(A.vertices, values))


# Ex. 5 data and the sign function read off its figure.
EX5_D = (3, 4, 1, 2, 3, 2)
EX5_R = {"r1": 3, "r2": 1, "g1": 2, "g2": 1, "p1": 2, "p2": 2, "b1": 2, "b2": 1}
EX5_EPS = {
    ("1", "solid"): -1, ("1", "dotted"): 1,
    ("2", "solid"): -1, ("2", "dashed"): 1,
    ("3", "solid"): 1, ("3", "dotted"): -1,
    ("4", "dashed"): -1, ("4", "squiggly"): 1,
    ("5", "dotted"): -1, ("5", "squiggly"): 1,
    ("6", "dashed"): 1, ("6", "squiggly"): -1,
}

# (quiver, d) for indecomposable regular components; r is the regular one.
# Expected (p, l, unit) come from the symbolic determinant, frozen here.
BAND_FIXTURES = [
    ("kronecker", (1, 1), (0, 0, 1)),
    ("a2", (1, 2, 1), (0, 0, 1)),
    ("ex3", (1, 1, 1, 1, 1, 1), (0, 0, 1)),
    ("fan", (0, 0, 1, 2, 2, 1), (1, 0, -1)),
    ("fan", (0, 0, 1, 3, 3, 2), (2, 0, -1)),
    ("fan", (0, 0, 2, 3, 3, 1), (2, 1, 1)),
]


def band_fixture(entry):
    from gentle.rank import regular_rank_function

    name, dims, _ = entry
    A = load(name)
    d = vec(A, dims)
    return A, d, regular_rank_function(A, d)


@pytest.fixture
def rng():
    return random.Random(20240611)


def frac(x) -> Fraction:
    return Fraction(x)
