"""
Monomial-ideal kernel: fast path and oracle for the Gröbner engine.
"""

from monomials.kernel import (
    MonomialIdeal,
    mono_bracket,
    mono_colon,
    mono_colon_monomial,
    mono_contains,
    mono_intersection,
    mono_membership,
    mono_minimalize,
    mono_product,
    mono_sum,
)

__all__ = [
    "MonomialIdeal",
    "mono_bracket",
    "mono_colon",
    "mono_colon_monomial",
    "mono_contains",
    "mono_intersection",
    "mono_membership",
    "mono_minimalize",
    "mono_product",
    "mono_sum",
]
