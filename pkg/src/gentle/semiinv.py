"""Generalized Schofield semi-invariants c^X(M) = det Hom(F, M).

Given a presentation P1 --F--> P0 of X, Hom(P0, M) is the direct sum of
M(x_u) over the P0 slots and Hom(P1, M) the sum of M(x_s) over P1 slots.
Precomposition with F sends a P0-slot u to a P1-slot s through the block
sum(kappa * M(rho)) taken over the terms (kappa, rho) of the entry (s, u).

Only ratios and vanishing loci are meaningful: the value depends on the
chosen presentation up to a nonzero scalar.  Presentations built here are
canonical (fixed base points and slot order) so values are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import FamilyCoincidenceError, NotSquareError, ShapeError
from .exact import linalg
from .exact.matrix import PolyMatrix, poly_det
from .exact.poly import MultiPoly
from .homalg import ProjectivePresentation, band_presentation
from .quiver import GentleAlgebra, weight_pairing
from .representation import Representation, direct_sum
from .updown import generic_decomposition, updown_module

LAMBDA, MU = "lambda", "mu"


def weight_of(pres: ProjectivePresentation) -> dict:
    """theta^X(v): multiplicity of P_v in P0 minus that in P1."""
    return pres.weight()


def hom_F_matrix(pres: ProjectivePresentation, M: Representation) -> PolyMatrix:
    """Hom(F, M) as a matrix with P1-slot rows and P0-slot columns."""
    row_offsets, total = [], 0
    for x in pres.p1:
        row_offsets.append(total)
        total += M.dims[x]
    nrows = total
    col_offsets, total = [], 0
    for x in pres.p0:
        col_offsets.append(total)
        total += M.dims[x]
    ncols = total
    grid = [[MultiPoly() for _ in range(ncols)] for _ in range(nrows)]
    cache: dict = {}
    for (s, u), terms in pres.entries.items():
        for kappa, rho in terms:
            if rho not in cache:
                cache[rho] = M.path_matrix(rho)
            block = cache[rho]
            r0, c0 = row_offsets[s], col_offsets[u]
            for i in range(block.rows):
                for j in range(block.cols):
                    x = block[i, j]
                    if not x.is_zero():
                        grid[r0 + i][c0 + j] = grid[r0 + i][c0 + j] + kappa * x
    return PolyMatrix(nrows, ncols, tuple(tuple(row) for row in grid))


def schofield_si(pres: ProjectivePresentation, M: Representation) -> MultiPoly:
    """det Hom(F, M); symbolic when F or M carry indeterminates."""
    theta = weight_of(pres)
    pairing = weight_pairing(theta, M.dims)
    if pairing != 0:
        raise NotSquareError(f"theta(dim M) = {pairing}; Hom(F, M) is not square")
    m = hom_F_matrix(pres, M)
    if not m.variables():
        grid = [[x.constant_value() for x in row] for row in m.entries]
        return MultiPoly.constant(linalg.det(grid) if grid else Fraction(1))
    return poly_det(m)


def schofield_value(pres: ProjectivePresentation, M: Representation,
                    assignment: Mapping | None = None) -> Fraction:
    return schofield_si(pres, M).evaluate(assignment or {})


# exponents ----------------------------------------------------------------------


@dataclass(frozen=True)
class ExponentPair:
    p: int
    l: int
    unit: Fraction
    key: tuple = ()  # (d, r) as sorted item tuples

    def formula(self, lam, mu) -> Fraction:
        lam, mu = Fraction(lam), Fraction(mu)
        return self.unit * lam ** self.p * mu ** self.l * (lam - mu)


def _strip(poly: MultiPoly, factor: MultiPoly) -> tuple[MultiPoly, int]:
    count = 0
    while not poly.is_zero() and factor.divides(poly):
        poly = poly.exquo(factor)
        count += 1
    return poly, count


def monomial_shape(poly: MultiPoly, lam: str = LAMBDA, mu: str = MU) -> tuple[Fraction, int, int]:
    """(unit, a, b) with poly = unit * lam^a * mu^b, or ShapeError."""
    rest, a = _strip(poly, MultiPoly.var(lam))
    rest, b = _strip(rest, MultiPoly.var(mu))
    if rest.is_zero() or not rest.is_constant():
        raise ShapeError(f"{poly} is not a monomial in {lam}, {mu}")
    return rest.constant_value(), a, b


def band_key(d: Mapping, r: Mapping) -> tuple:
    return (tuple(sorted(d.items())), tuple(sorted(r.items())))


def _single_band(A: GentleAlgebra, d: Mapping, r: Mapping, eps=None) -> str:
    decomp = generic_decomposition(A, d, r, eps)
    kinds = [(e.kind, e.multiplicity) for e in decomp.entries if sum(e.dim.values())]
    if kinds != [("band", 1)]:
        raise ShapeError(f"(d, r) is not a single band component: {kinds}")
    return "b1"


def band_pair_determinant(A: GentleAlgebra, d: Mapping, r: Mapping, d2: Mapping | None = None,
                          r2: Mapping | None = None, eps=None) -> MultiPoly:
    """det Hom(F, M) for X = M(d, r, lambda) and M = M(d2, r2, mu), symbolic."""
    d2 = d if d2 is None else d2
    r2 = r if r2 is None else r2
    _single_band(A, d, r, eps)
    _single_band(A, d2, r2, eps)
    pres = band_presentation(A, d, r, eps, lambdas={"b1": MultiPoly.var(LAMBDA)})
    M = updown_module(A, d2, r2, eps, lambdas={"b1": MultiPoly.var(MU)})
    return schofield_si(pres, M)


def band_exponents(A: GentleAlgebra, d: Mapping, r: Mapping, eps=None) -> ExponentPair:
    """Factor det Hom(F_lambda, M_mu) as unit * lambda^p * mu^l * (lambda - mu)."""
    d, r = A.vector(d), A.arrow_vector(r)
    det = band_pair_determinant(A, d, r, eps=eps)
    diff = MultiPoly.var(LAMBDA) - MultiPoly.var(MU)
    rest, k = _strip(det, diff)
    if k != 1:
        raise ShapeError(f"determinant {det} has (lambda - mu) to the power {k}, expected 1")
    unit, p, l = monomial_shape(rest)
    return ExponentPair(p, l, unit, band_key(d, r))


# several band families ------------------------------------------------------------


@dataclass(frozen=True)
class Family:
    d: dict
    r: dict
    multiplicity: int = 1


def families_of(decomp, algebra: GentleAlgebra | None = None) -> list:
    """Band families from a GenericDecomposition or a list of (d, r[, m])."""
    out = []
    entries = getattr(decomp, "entries", decomp)
    for e in entries:
        if isinstance(e, Family):
            out.append(e)
        elif hasattr(e, "kind"):
            if e.kind != "band":
                raise ShapeError(f"component {e.word_text} is a string, not a band")
            out.append(Family(dict(e.dim), dict(e.rank), e.multiplicity))
        else:
            d, r, *rest = e
            out.append(Family(dict(d), dict(r), rest[0] if rest else 1))
    if algebra is not None:
        out = [Family(algebra.vector(f.d), algebra.arrow_vector(f.r), f.multiplicity) for f in out]
    return out


def _check_family_values(families: Sequence[Family], mu: Mapping) -> None:
    for i, fam in enumerate(families):
        values = [Fraction(mu[(i, j)]) for j in range(fam.multiplicity)]
        if any(v == 0 for v in values):
            raise FamilyCoincidenceError(f"family {i}: band parameters must be nonzero")
        if len(set(values)) != len(values):
            raise FamilyCoincidenceError(f"family {i}: band parameters {values} coincide")


def generic_module(A: GentleAlgebra, families: Sequence[Family], mu: Mapping, eps=None) -> Representation:
    """X_mu: the direct sum of M(d_i, r_i, mu(i, j)) over families and copies."""
    summands = []
    for i, fam in enumerate(families):
        for j in range(fam.multiplicity):
            summands.append(updown_module(A, fam.d, fam.r, eps, lambdas={"b1": Fraction(mu[(i, j)])}))
    return direct_sum(*summands)


@dataclass
class MultiBandCheck:
    direct: Fraction
    formula: Fraction
    exponents: ExponentPair
    cross: dict = field(default_factory=dict)  # i' -> (unit, a, b)

    @property
    def equal(self) -> bool:
        return self.direct == self.formula


def cross_factor(A: GentleAlgebra, source: Family, target: Family, eps=None) -> tuple:
    """(unit, a, b) with det Hom(F_{source, lambda}, M_{target, mu}) = unit lambda^a mu^b."""
    det = band_pair_determinant(A, source.d, source.r, target.d, target.r, eps)
    return monomial_shape(det)


def multi_band_eval(A: GentleAlgebra, decomp, i: int, lam, mu: Mapping, eps=None,
                    exponents: Mapping | None = None) -> MultiBandCheck:
    """c^{M(d_i, r_i, lambda)}(X_mu) computed directly and by the product formula.

    ``mu`` maps (family, copy) to a nonzero rational.  Factors for the other
    families are the symbolic pair determinants, each checked to be a
    monomial in lambda and mu.
    """
    families = families_of(decomp, A)
    _check_family_values(families, mu)
    lam = Fraction(lam)
    X = generic_module(A, families, mu, eps)
    fam = families[i]
    pres = band_presentation(A, fam.d, fam.r, eps, lambdas={"b1": lam})
    direct = schofield_si(pres, X).constant_value()
    ex = (exponents or {}).get(i) or band_exponents(A, fam.d, fam.r, eps)
    formula = Fraction(1)
    for j in range(fam.multiplicity):
        formula *= ex.formula(lam, mu[(i, j)])
    cross = {}
    for k, other in enumerate(families):
        if k == i:
            continue
        unit, a, b = cross[k] = cross_factor(A, fam, other, eps)
        for j in range(other.multiplicity):
            formula *= unit * lam ** a * Fraction(mu[(k, j)]) ** b
    return MultiBandCheck(direct, formula, ex, cross)


# separation --------------------------------------------------------------------------


@dataclass
class SeparationResult:
    ratios_agree: bool
    permutation_equivalent: bool
    ratios_mu: list
    ratios_nu: list

    @property
    def consistent(self) -> bool:
        return self.ratios_agree == self.permutation_equivalent


def basis_ratios(A: GentleAlgebra, families: Sequence[Family], grid: Mapping, mu: Mapping,
                 eps=None, presentations: dict | None = None) -> list:
    """c^{lambda(i,j)}(X_mu) / c^{lambda(i,j+1)}(X_mu) for every family i and j < m_i."""
    X = generic_module(A, families, mu, eps)
    presentations = {} if presentations is None else presentations
    ratios = []
    for i, fam in enumerate(families):
        values = [Fraction(x) for x in grid[i]]
        if len(values) != fam.multiplicity + 1 or len(set(values)) != len(values) or 0 in values:
            raise FamilyCoincidenceError(
                f"family {i}: need {fam.multiplicity + 1} distinct nonzero grid values, got {values}")
        dets = []
        for lam in values:
            key = (i, lam)
            if key not in presentations:
                presentations[key] = band_presentation(A, fam.d, fam.r, eps, lambdas={"b1": lam})
            dets.append(schofield_si(presentations[key], X).constant_value())
        for j in range(fam.multiplicity):
            if dets[j + 1] == 0:
                raise FamilyCoincidenceError(
                    f"family {i}: grid value {values[j + 1]} makes the denominator vanish on X")
            ratios.append(dets[j] / dets[j + 1])
    return ratios


def permutation_equivalent(families: Sequence[Family], mu: Mapping, nu: Mapping) -> bool:
    return all(
        sorted(Fraction(mu[(i, j)]) for j in range(f.multiplicity))
        == sorted(Fraction(nu[(i, j)]) for j in range(f.multiplicity))
        for i, f in enumerate(families)
    )


def separation_test(A: GentleAlgebra, decomp, grid: Mapping, mu: Mapping, nu: Mapping,
                    eps=None, presentations: dict | None = None) -> SeparationResult:
    families = families_of(decomp, A)
    _check_family_values(families, mu)
    _check_family_values(families, nu)
    rm = basis_ratios(A, families, grid, mu, eps, presentations)
    rn = basis_ratios(A, families, grid, nu, eps, presentations)
    return SeparationResult(rm == rn, permutation_equivalent(families, mu, nu), rm, rn)
