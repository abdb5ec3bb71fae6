"""
Gröbner engine: Buchberger's algorithm and the ideal operations built on it.
"""

from groebner.buchberger import BuchbergerStats, GroebnerBasis, groebner_basis, is_groebner_basis, s_polynomial
from groebner.ideal import ComputePath, Ideal
from groebner.operations import (
    bracket_power,
    ideal_colon,
    ideal_contains,
    ideal_equal,
    ideal_intersection,
    ideal_membership,
    ideal_product,
    ideal_sum,
)

__all__ = [
    "BuchbergerStats",
    "GroebnerBasis",
    "groebner_basis",
    "is_groebner_basis",
    "s_polynomial",
    "ComputePath",
    "Ideal",
    "bracket_power",
    "ideal_colon",
    "ideal_contains",
    "ideal_equal",
    "ideal_intersection",
    "ideal_membership",
    "ideal_product",
    "ideal_sum",
]
