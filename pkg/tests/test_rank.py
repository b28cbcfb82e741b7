import random

from hypothesis import given, settings
from hypothesis import strategies as st

from gentle.generate import random_gentle_algebra, regular_dimension_vectors
from gentle.quiver import euler_form
from gentle.rank import (
    alternating_color_sums, describe_component, is_maximal, is_rank_function, is_regular,
    maximal_rank_functions, regular_rank_function, regularity_violations, valid_rank_functions,
)

from conftest import EX5_D, EX5_R, load, vec


def test_rank_function_bounds():
    A = load("a2")
    d = vec(A, (2, 2, 2))
    assert is_rank_function(A, d, {"a1": 1, "a2": 1, "b1": 1, "b2": 1})
    check = is_rank_function(A, d, {"a1": 2, "a2": 1})
    assert not check and "r(a1)+r(a2)=3" in check.violations[0]


def test_ex3_has_two_maximal_rank_functions():
    A = load("ex3")
    d = vec(A, (1,) * 6)
    found = maximal_rank_functions(A, d)
    assert found == [
        {"a1": 0, "a2": 1, "a3": 0, "p": 1, "q": 1, "s": 1, "t": 1},
        {"a1": 1, "a2": 0, "a3": 1, "p": 1, "q": 1, "s": 1, "t": 1},
    ]
    assert [is_regular(A, d, r) for r in found] == [False, True]


def test_a2_constant_rank_is_maximal_not_regular():
    A = load("a2")
    d = vec(A, (2, 2, 2))
    r = {"a1": 1, "a2": 1, "b1": 1, "b2": 1}
    assert is_maximal(A, d, r)
    assert not is_regular(A, d, r)
    assert regular_rank_function(A, d) is None
    assert len(maximal_rank_functions(A, d)) == 9


def test_ex5_data_is_not_regular():
    A = load("ex5")
    problems = regularity_violations(A, vec(A, EX5_D), EX5_R)
    assert any("color dotted at vertex 1" in p for p in problems)
    desc = describe_component(A, vec(A, EX5_D), EX5_R)
    assert desc.is_regular is False


def test_kronecker_regular():
    A = load("kronecker")
    assert regular_rank_function(A, {"1": 2, "2": 2}) == {"a": 2, "b": 2}
    assert regular_rank_function(A, {"1": 1, "2": 2}) is None


def brute_maximal(A, d):
    valid = list(valid_rank_functions(A, d))
    keys = [tuple(r[a.name] for a in A.arrows) for r in valid]
    out = []
    for r, k in zip(valid, keys):
        if not any(o != k and all(x <= y for x, y in zip(k, o)) for o in keys):
            out.append(r)
    return sorted(out, key=lambda r: tuple(r[a.name] for a in A.arrows))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.data())
def test_maximal_matches_brute_force(seed, data):
    A = random_gentle_algebra(random.Random(seed), max_vertices=5)
    d = {v: data.draw(st.integers(0, 2)) for v in A.vertices}
    assert maximal_rank_functions(A, d) == brute_maximal(A, d)
    for r in maximal_rank_functions(A, d):
        assert is_maximal(A, d, r)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_regular_rank_function_is_unique(seed):
    A = random_gentle_algebra(random.Random(seed))
    for d, r in list(regular_dimension_vectors(A, 3))[:5]:
        regular = [s for s in valid_rank_functions(A, d) if is_regular(A, d, s)]
        assert regular == [r]
        assert euler_form(A, d, d) == 0
        assert set(alternating_color_sums(A, d).values()) <= {0}
