"""Exact arithmetic: rationals, sparse polynomials, polynomial matrices, F_p."""

from fractions import Fraction

from .fp import FpMatrix, fp_kernel, fp_rank, subspaces
from .matrix import PolyMatrix, bareiss_det, cofactor_det, poly_det, poly_rank_at
from .poly import MultiPoly

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or an integer; decimals are rejected to keep inputs exact."""
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


__all__ = [
    "Fraction", "Rational", "parse_rational", "MultiPoly", "PolyMatrix", "poly_det",
    "bareiss_det", "cofactor_det", "poly_rank_at", "FpMatrix", "fp_kernel", "fp_rank",
    "subspaces",
]
