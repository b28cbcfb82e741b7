"""King theta-(semi)stability by exhaustive submodule search over F_p.

A module over Q is reduced modulo a small prime and every subrepresentation
of the reduction is enumerated: vertices are visited in topological order and
U_y ranges over the subspaces containing sum M(a) U_ta for arrows a into y.
Verdicts therefore hold over F_p at the given specialization; they are not
proofs in characteristic zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping

from .errors import BadPrimeError, BudgetExceededError, RelationError, WeightError
from .exact.fp import FpMatrix, is_prime, span_contains, subspace_count, subspaces_containing
from .quiver import GentleAlgebra, weight_pairing
from .representation import RationalRep, Representation

DefaultBudget = 10**8

STABLE = "stable"
SEMISTABLE = "semistable-not-stable"
UNSTABLE = "unstable"


@dataclass(frozen=True)
class FpRepresentation:
    algebra: GentleAlgebra
    p: int
    dims: dict
    maps: dict  # arrow -> FpMatrix (d(ha) x d(ta))

    def relation_violations(self) -> list:
        return [(a, b) for a, b in self.algebra.relations
                if not (self.maps[b] @ self.maps[a]).is_zero()]

    def dim_vector(self) -> tuple:
        return tuple(self.dims[v] for v in self.algebra.vertices)


def _reduce(x: Fraction, p: int) -> int:
    if x.denominator % p == 0:
        raise BadPrimeError(f"denominator of {x} is divisible by {p}; choose another prime")
    return x.numerator * pow(x.denominator, -1, p) % p


def reduce_mod_p(M, assignment: Mapping | None = None, p: int = 5) -> FpRepresentation:
    if not is_prime(p):
        raise BadPrimeError(f"{p} is not prime")
    R = M if isinstance(M, RationalRep) else M.specialize(assignment)
    A = R.algebra
    maps = {}
    for a in A.arrows:
        rows = [[_reduce(Fraction(x), p) for x in row] for row in R.maps[a.name]]
        maps[a.name] = FpMatrix.from_rows(p, rows, R.dims[a.tail])
    out = FpRepresentation(A, p, dict(R.dims), maps)
    bad = out.relation_violations()
    if bad:
        raise RelationError(f"relations {bad} fail modulo {p}")
    return out


def search_size(M: FpRepresentation) -> int:
    return math.prod(subspace_count(M.dims[v], M.p) for v in M.algebra.vertices)


def enumerate_submodules(M: FpRepresentation, budget: int = DefaultBudget) -> Iterator[dict]:
    """Every subrepresentation as vertex -> RREF basis tuple."""
    size = search_size(M)
    if size > budget:
        raise BudgetExceededError(
            f"exhaustive search needs up to {size} subspace tuples (budget {budget}); "
            "use a smaller prime or a smaller module")
    A, p = M.algebra, M.p
    order = A.topological_order
    chosen: dict = {}

    def visit(k: int) -> Iterator[dict]:
        if k == len(order):
            yield dict(chosen)
            return
        y = order[k]
        required = []
        for a in A.quiver.in_arrows(y):
            m = M.maps[a.name]
            required.extend(m.apply(u) for u in chosen[a.tail])
        for U in subspaces_containing(required, M.dims[y], p):
            chosen[y] = U
            yield from visit(k + 1)
        chosen.pop(y, None)

    yield from visit(0)


def submodule_dimvectors(M: FpRepresentation, budget: int = DefaultBudget) -> set:
    vertices = M.algebra.vertices
    return {tuple(len(U[v]) for v in vertices) for U in enumerate_submodules(M, budget)}


@dataclass
class StabilityCertificate:
    verdict: str
    theta: dict
    prime: int
    realized: tuple  # sorted dimension vectors (vertex order)
    witness: dict | None = None
    witness_basis: dict | None = None
    module: FpRepresentation | None = field(default=None, repr=False)
    scope: str = "over F_p at the given specialization"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "theta": self.theta,
            "prime": self.prime,
            "witness": self.witness,
            "realized": [list(v) for v in self.realized],
            "scope": self.scope,
        }


def check_stability(M: FpRepresentation, theta: Mapping, budget: int = DefaultBudget) -> StabilityCertificate:
    A = M.algebra
    theta = A.vector(theta, kind="weight", nonnegative=False)
    if weight_pairing(theta, M.dims) != 0:
        raise WeightError(f"theta(dim M) = {weight_pairing(theta, M.dims)}, expected 0")
    vertices = A.vertices
    full = M.dim_vector()
    zero = tuple(0 for _ in vertices)
    realized: dict = {}
    for U in enumerate_submodules(M, budget):
        key = tuple(len(U[v]) for v in vertices)
        realized.setdefault(key, U)
    value = {v: sum(theta[x] * n for x, n in zip(vertices, v)) for v in realized}
    positive = [v for v in realized if value[v] > 0]
    balanced = [v for v in realized if value[v] == 0 and v not in (zero, full)]
    if positive:
        verdict, witness = UNSTABLE, max(positive, key=lambda v: (value[v], v))
    elif balanced:
        verdict, witness = SEMISTABLE, min(balanced)
    else:
        verdict, witness = STABLE, None
    return StabilityCertificate(
        verdict, theta, M.p, tuple(sorted(realized)),
        dict(zip(vertices, witness)) if witness else None,
        realized[witness] if witness else None,
        M,
    )


def revalidate(cert: StabilityCertificate) -> bool:
    """Re-check the certificate's claims using only what it stores."""
    M = cert.module
    A = M.algebra
    vertices = A.vertices
    full = M.dim_vector()
    zero = tuple(0 for _ in vertices)

    def th(v) -> int:
        return sum(cert.theta[x] * n for x, n in zip(vertices, v))

    if th(full) != 0 or zero not in cert.realized or full not in cert.realized:
        return False
    if cert.verdict == STABLE:
        return cert.witness is None and all(th(v) < 0 for v in cert.realized if v not in (zero, full))
    if cert.witness is None or cert.witness_basis is None:
        return False
    U = cert.witness_basis
    w = tuple(cert.witness[v] for v in vertices)
    if tuple(len(U[v]) for v in vertices) != w:
        return False
    for a in A.arrows:
        images = [M.maps[a.name].apply(u) for u in U[a.tail]]
        if not span_contains(U[a.head], images, M.dims[a.head], M.p):
            return False
    if cert.verdict == UNSTABLE:
        return th(w) > 0
    if cert.verdict == SEMISTABLE:
        return th(w) == 0 and w not in (zero, full) and all(th(v) <= 0 for v in cert.realized)
    return False


def stability_of(M: Representation, theta: Mapping, assignment: Mapping | None = None,
                 p: int = 5, budget: int = DefaultBudget) -> StabilityCertificate:
    return check_stability(reduce_mod_p(M, assignment, p), theta, budget)
