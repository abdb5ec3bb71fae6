"""
frobmaps algebra core: GF(p) scalars, monomials, sparse polynomials, division.
"""

from algebra.field import FieldElement, PrimeField
from algebra.monomial import Monomial, MonomialOrder, Ordering, mono_compare
from algebra.polynomial import Polynomial, poly_add, poly_frobenius_power, poly_mul, render_polynomial
from algebra.reduction import exact_divide, normal_form, reduce_polynomial
from algebra.ring import RingContext, make_ring

__all__ = [
    "FieldElement",
    "PrimeField",
    "Monomial",
    "MonomialOrder",
    "Ordering",
    "mono_compare",
    "Polynomial",
    "poly_add",
    "poly_mul",
    "poly_frobenius_power",
    "render_polynomial",
    "normal_form",
    "reduce_polynomial",
    "exact_divide",
    "RingContext",
    "make_ring",
]
