from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentle.errors import AcyclicityError, ColoringError, DimensionError, GentleAxiomError, QuiverSyntaxError
from gentle.generate import random_gentle_algebra
from gentle.homalg import projective_cover
from gentle.quiver import (
    GentleAlgebra, Path, euler_form, ext_dimensions, format_quiver, parse_quiver, weight_pairing,
)
from gentle.representation import Representation

from conftest import load


def test_relations_are_monochromatic_pairs():
    A = load("ex5")
    assert set(A.relations) == {("r1", "r2"), ("g1", "g2"), ("p1", "p2"), ("b1", "b2")}
    assert A.is_relation("r1", "r2") and not A.is_relation("r1", "p2")


def test_butterfly_names_axiom_three():
    with pytest.raises(GentleAxiomError) as info:
        load("butterfly")
    assert info.value.axiom == 3
    assert "axiom (3)" in str(info.value)


def test_three_arrows_into_a_vertex_break_axiom_one():
    arrows = [("a", "1", "4", "x"), ("b", "2", "4", "y"), ("c", "3", "4", "z")]
    with pytest.raises(GentleAxiomError) as info:
        GentleAlgebra.from_arrows(arrows)
    assert info.value.axiom == 1


def test_cycle_rejected():
    with pytest.raises(AcyclicityError):
        GentleAlgebra.from_arrows([("a", "1", "2", "x"), ("b", "2", "1", "y")])


def test_color_must_be_a_path():
    with pytest.raises(ColoringError):
        GentleAlgebra.from_arrows([("a", "1", "2", "x"), ("b", "3", "4", "x")])


@pytest.mark.parametrize("text,line,col", [
    ("quiver q\nvertex 1\narrow a 1 2 x\n", 3, 11),
    ("quiver q\nvertex 1\n  bogus 1\n", 3, 3),
    ("vertex 1\nvertex 1\n", 2, 1),
    ("vertex 1\nvertex 2\narrow a 1 2\n", 3, 1),
])
def test_syntax_errors_carry_positions(text, line, col):
    with pytest.raises(QuiverSyntaxError) as info:
        parse_quiver(text)
    assert (info.value.line, info.value.col) == (line, col)


def test_format_round_trip():
    for name in ("ex5", "ex3", "a2", "kronecker", "fan", "twoband"):
        A = load(name)
        B = parse_quiver(format_quiver(A))
        assert B.vertices == A.vertices and B.arrows == A.arrows and B.relations == A.relations


def test_vector_validation():
    A = load("a2")
    with pytest.raises(DimensionError):
        A.vector({"9": 1})
    with pytest.raises(DimensionError):
        A.vector({"1": -1})
    assert A.vector({"2": 3}) == {"1": 0, "2": 3, "3": 0}


def test_paths_avoid_relations():
    A = load("a2")
    assert {str(p) for p in A.paths_from("1")} == {"e_1", "a1", "b1", "b2*a1", "a2*b1"}
    assert A.extend(Path("1", ("a1",), "2"), "a2") is None


def test_ext_dimensions_a2():
    layers = ext_dimensions(load("a2"))
    assert layers[1] == {("1", "2"): 2, ("2", "3"): 2}
    assert layers[2] == {("1", "3"): 2}
    assert len(layers) == 3


def test_euler_form_frozen_values():
    assert euler_form(load("kronecker"), {"1": 1, "2": 1}, {"1": 1, "2": 1}) == 0
    # A(2) by hand: sum d_i^2 - 2(d1 d2 + d2 d3) + 2 d1 d3
    A = load("a2")
    assert euler_form(A, {"1": 2, "2": 2, "3": 2}, {"1": 2, "2": 2, "3": 2}) == 12 - 16 + 8
    # Ex. 5 data (not regular): computed value
    E = load("ex5")
    d = dict(zip(E.vertices, (3, 4, 1, 2, 3, 2)))
    assert euler_form(E, d, d) == 1


def test_weight_pairing():
    assert weight_pairing({"1": 1, "2": -1}, {"1": 3, "2": 3}) == 0


def simple(A, x):
    return Representation.from_rational(A, {x: 1}, {})


def resolution_multiplicities(A, x, depth):
    """Multiplicity of each P_y in the terms of a minimal resolution of S_x."""
    M = simple(A, x).specialize()
    out = []
    for _ in range(depth):
        cover = projective_cover(M)
        counts = {}
        for y in cover.slots:
            counts[y] = counts.get(y, 0) + 1
        out.append(counts)
        M = cover.kernel
        if not any(M.dims.values()):
            break
    return out


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_chain_count_matches_minimal_resolution(seed):
    import random

    A = random_gentle_algebra(random.Random(seed), max_vertices=5)
    layers = ext_dimensions(A)
    for x in A.vertices:
        res = resolution_multiplicities(A, x, len(A.vertices) + 1)
        for l, counts in enumerate(res):
            expected = {y: n for (i, y), n in (layers[l].items() if l < len(layers) else []) if i == x}
            assert counts == expected, (x, l)
        assert len(res) == max([l + 1 for l in range(len(layers)) if any(i == x for i, _ in layers[l])])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.data())
def test_euler_form_is_bilinear(seed, data):
    import random

    A = random_gentle_algebra(random.Random(seed))
    vecs = st.lists(st.integers(-3, 3), min_size=len(A.vertices), max_size=len(A.vertices)).map(
        lambda xs: dict(zip(A.vertices, xs)))
    d, e, f = data.draw(vecs), data.draw(vecs), data.draw(vecs)
    s = {v: d[v] + e[v] for v in A.vertices}
    assert euler_form(A, s, f) == euler_form(A, d, f) + euler_form(A, e, f)
    assert euler_form(A, f, s) == euler_form(A, f, d) + euler_form(A, f, e)
