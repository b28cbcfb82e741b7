import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentle.errors import NotRegularError, SpecializationError
from gentle.exact import linalg
from gentle.generate import random_gentle_algebra, random_representation
from gentle.homalg import (
    band_module, band_presentation, check_resolution, ext1_dim, hom_dim, hom_space,
    is_homomorphism, is_injective, minimal_presentation, pdim_at_most_one, projective_cover,
    projective_module,
)
from gentle.representation import Representation, direct_sum
from gentle.semiinv import hom_F_matrix

from conftest import BAND_FIXTURES, EX5_D, EX5_R, band_fixture, load, vec


def dense_hom_dim(M, N):
    """dim Hom by evaluating phi -> (phi(ha) M(a) - N(a) phi(ta))_a on unit matrices."""
    A = M.algebra
    M, N = M.specialize(), N.specialize()
    units = [(v, p, q) for v in A.vertices for p in range(N.dims[v]) for q in range(M.dims[v])]
    columns = []
    for v, p, q in units:
        image = []
        for a in A.arrows:
            left = [[Fraction(0)] * M.dims[a.tail] for _ in range(N.dims[a.head])]
            if a.head == v:
                for j in range(M.dims[a.tail]):
                    left[p][j] += M.maps[a.name][q][j]
            if a.tail == v:
                for i in range(N.dims[a.head]):
                    left[i][q] -= N.maps[a.name][i][p]
            image += [x for row in left for x in row]
        columns.append(image)
    if not columns:
        return 0
    return len(units) - linalg.rank(linalg.transpose(columns)) if columns[0] else len(units)


def _rank(m):
    return linalg.rank(m) if m and m[0] else 0


def complex_ext(M, N):
    """H^1 of Hom(P., N) for the first three terms of a minimal resolution."""
    M = M.specialize()
    first = minimal_presentation(M)
    second = minimal_presentation(projective_cover(M).kernel)
    assert second.p0 == first.p1
    f1 = hom_F_matrix(first, N).specialize({})
    f2 = hom_F_matrix(second, N).specialize({})
    cols = sum(N.dims[x] for x in first.p1)
    return cols - _rank(f2) - _rank(f1)


def random_pair(seed, max_dim=2):
    rng = random.Random(seed)
    A = random_gentle_algebra(rng, max_vertices=5)
    d = {v: rng.randint(0, max_dim) for v in A.vertices}
    e = {v: rng.randint(0, max_dim) for v in A.vertices}
    return A, random_representation(A, d, rng), random_representation(A, e, rng)


def test_projective_of_a2():
    A = load("a2")
    P = projective_module(A, "1")
    assert P.module.dims == {"1": 1, "2": 2, "3": 2}
    assert not P.module.relation_violations()


def test_simple_top_of_a2_has_pdim_two():
    A = load("a2")
    S = Representation.from_rational(A, {"1": 1}, {})
    pres = minimal_presentation(S)
    assert pres.p0 == ("1",) and pres.p1 == ("2", "2")
    assert pres.minimal
    assert not is_injective(pres)
    assert not pdim_at_most_one(S)


def test_kronecker_band():
    A = load("kronecker")
    d, r = {"1": 1, "2": 1}, {"a": 1, "b": 1}
    pres = band_presentation(A, d, r)
    assert pres.describe() == ["P1[0]@2 -> P0[0]@1: (lambda_b1)*a + (-1)*b"]
    M = band_module(A, d, r)
    at = {"lambda_b1": Fraction(3)}
    assert hom_dim(M, M, at) == 1 and ext1_dim(M, M, at) == 1
    assert ext1_dim(M.specialize(at), M.specialize({"lambda_b1": 5})) == 0


def test_band_presentation_requires_regular():
    A = load("ex5")
    with pytest.raises(NotRegularError):
        band_presentation(A, vec(A, EX5_D), EX5_R)


def test_symbolic_modules_need_values():
    A = load("kronecker")
    M = band_module(A, {"1": 1, "2": 1}, {"a": 1, "b": 1})
    with pytest.raises(SpecializationError):
        hom_dim(M, M)


@pytest.mark.parametrize("entry", BAND_FIXTURES, ids=lambda e: f"{e[0]}-{e[1]}")
def test_band_fixtures_resolve_exactly(entry):
    A, d, r = band_fixture(entry)
    pres = band_presentation(A, d, r)
    assert pres.minimal
    M = band_module(A, d, r)
    report = check_resolution(pres, M, {"lambda_b1": Fraction(7, 3)})
    assert report, report.details


@pytest.mark.parametrize("entry", BAND_FIXTURES, ids=lambda e: f"{e[0]}-{e[1]}")
def test_band_fixture_homological_suite(entry):
    A, d, r = band_fixture(entry)
    M = band_module(A, d, r)
    X, Y = M.specialize({"lambda_b1": Fraction(-2, 5)}), M.specialize({"lambda_b1": Fraction(3)})
    assert hom_dim(X, X) == 1
    assert ext1_dim(X, X) == 1
    assert ext1_dim(X, Y) == 0 and hom_dim(X, Y) == 0
    assert pdim_at_most_one(X)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_yoneda(seed):
    A, M, _ = random_pair(seed)
    for x in A.vertices:
        assert hom_dim(projective_module(A, x).module, M) == M.dims[x]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_hom_matches_dense_assembly(seed):
    _, M, N = random_pair(seed)
    space = hom_space(M, N)
    assert space.dim == dense_hom_dim(M, N)
    for phi in space.basis:
        assert is_homomorphism(M, N, phi)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_ext_two_routes(seed):
    _, M, N = random_pair(seed)
    assert ext1_dim(M, N) == complex_ext(M, N)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_minimal_presentation_is_exact_at_p0(seed):
    _, M, _ = random_pair(seed)
    pres = minimal_presentation(M)
    report = check_resolution(pres, M)
    assert report.surjective and report.composite_zero and report.kernel_equals_image
    assert report.injective == pdim_at_most_one(M)
    assert pres.minimal


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_hom_is_additive(seed):
    _, M, N = random_pair(seed, max_dim=1)
    assert hom_dim(direct_sum(M, M), N) == 2 * hom_dim(M, N)
    assert ext1_dim(M, direct_sum(N, N)) == 2 * ext1_dim(M, N)
