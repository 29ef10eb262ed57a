"""W3 invariants of unknotted barbell diffeomorphisms.

Modules: :mod:`freeword` (words), :mod:`groupalg` (polynomials),
:mod:`hexagon` (the quotient), :mod:`exactla` (linear algebra),
:mod:`w3` (the invariant), :mod:`oracle` (second route and reference data),
:mod:`independence` (certified independence), :mod:`verify` (batch suites)
and :mod:`cli`.
"""

from .freeword import (BarbellWord, ReducedWord, ThetaSpec, crossing_count, exponent_sum,
                       invert, parse_word, theta, theta_to_word)
from .groupalg import Poly, mul_monomial, substitute
from .hexagon import (Inconclusive, Nonzero, Zero, annihilation_audit, certify_nonzero,
                      check_zero, decide, hexagon_m1, hexagon_m2, slice_functional_m1)
from .w3 import T_int, T_word, TypeCounts, classify_counts, factorize, w3, w3_theta
from .independence import Dependent, Independent, family_theta, independent

__version__ = "0.1.0"

__all__ = [
    "BarbellWord", "ReducedWord", "ThetaSpec", "crossing_count", "exponent_sum", "invert",
    "parse_word", "theta", "theta_to_word", "Poly", "mul_monomial", "substitute",
    "Inconclusive", "Nonzero", "Zero", "annihilation_audit", "certify_nonzero", "check_zero",
    "decide", "hexagon_m1", "hexagon_m2", "slice_functional_m1", "T_int", "T_word",
    "TypeCounts", "classify_counts", "factorize", "w3", "w3_theta", "Dependent",
    "Independent", "family_theta", "independent",
]
