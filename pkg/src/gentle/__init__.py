"""Exact computations for triangular gentle algebras kQ/I_c.

Irreducible components of module varieties are indexed by rank functions;
their generic modules come from up-and-down graphs, and band components carry
generalized Schofield semi-invariants.
"""

from .errors import GentleError
from .exact import Fraction, MultiPoly, PolyMatrix, parse_rational
from .homalg import (
    band_presentation,
    check_resolution,
    ext1_dim,
    hom_dim,
    hom_space,
    minimal_presentation,
    pdim_at_most_one,
    projective_module,
)
from .quiver import GentleAlgebra, Path, euler_form, parse_quiver, weight_pairing
from .rank import is_maximal, is_rank_function, is_regular, maximal_rank_functions, regular_rank_function
from .representation import Representation, direct_sum
from .semiinv import band_exponents, multi_band_eval, schofield_si, separation_test, weight_of
from .stability import check_stability, reduce_mod_p, revalidate, submodule_dimvectors
from .updown import generic_decomposition, transcendence_degree, updown_graph, updown_module

__version__ = "0.1.0"
