"""
Ideal operations: membership, equality, containment, sum, product,
intersection, colon and Frobenius bracket powers.

Every operation takes a ComputePath. AUTO hands all-monomial inputs to the
monomial kernel and everything else to the Gröbner engine; GROEBNER forces
the general engine even on monomial input (used for cross-checking).
"""

from __future__ import annotations

import logging
from typing import List

from algebra.monomial import MonomialOrder
from algebra.polynomial import Polynomial, lift_polynomial, poly_frobenius_power, project_polynomial
from algebra.reduction import exact_divide
from core.error_handling import ContextMismatchError
from groebner.buchberger import GroebnerBasis, groebner_basis
from groebner.ideal import ComputePath, Ideal
from monomials.kernel import (
    mono_bracket,
    mono_colon,
    mono_contains,
    mono_intersection,
    mono_membership,
    mono_product,
    mono_sum,
)

logger = logging.getLogger(__name__)


def _check(*ideals: Ideal) -> None:
    ctx = ideals[0].context
    for other in ideals[1:]:
        if other.context != ctx:
            raise ContextMismatchError(f"{ctx} vs {other.context}")


def use_monomial_kernel(path: ComputePath, *ideals: Ideal) -> bool:
    path = ComputePath(path)
    if path is ComputePath.GROEBNER:
        return False
    monomial = all(ideal.is_monomial for ideal in ideals)
    if path is ComputePath.MONOMIAL and not monomial:
        raise ValueError("the monomial path needs monomial ideals")
    return monomial


# =============================================================================
# MEMBERSHIP / EQUALITY / CONTAINMENT
# =============================================================================


def ideal_membership(f: Polynomial, I: Ideal, path: ComputePath = ComputePath.AUTO) -> bool:
    if f.context != I.context:
        raise ContextMismatchError(f"{f.context} vs {I.context}")
    if f.is_zero:
        return True
    if I.is_zero:
        return False
    if I.has_unit_generator():
        return True
    if use_monomial_kernel(path, I):
        # a monomial ideal contains f iff it contains every term of f
        mono = I.to_monomial_ideal()
        return all(mono_membership(m, mono) for m in f.monomials())
    return I.groebner_basis().contains(f)


def ideal_contains(I: Ideal, J: Ideal, path: ComputePath = ComputePath.AUTO) -> bool:
    """J ⊆ I."""
    _check(I, J)
    if J.is_zero:
        return True
    if use_monomial_kernel(path, I, J):
        return mono_contains(I.to_monomial_ideal(), J.to_monomial_ideal())
    return all(ideal_membership(g, I, ComputePath.GROEBNER) for g in J.generators)


def ideal_equal(I: Ideal, J: Ideal, path: ComputePath = ComputePath.AUTO) -> bool:
    _check(I, J)
    if use_monomial_kernel(path, I, J):
        return I.to_monomial_ideal().generators == J.to_monomial_ideal().generators
    return I.groebner_basis().key() == J.groebner_basis().key()


# =============================================================================
# SUM / PRODUCT
# =============================================================================


def ideal_sum(I: Ideal, J: Ideal, path: ComputePath = ComputePath.AUTO) -> Ideal:
    _check(I, J)
    if J.is_zero:
        return I
    if I.is_zero:
        return J
    if use_monomial_kernel(path, I, J):
        return Ideal.from_monomial_ideal(mono_sum(I.to_monomial_ideal(), J.to_monomial_ideal()))
    return Ideal(I.context, I.generators + J.generators)


def ideal_product(I: Ideal, J: Ideal, path: ComputePath = ComputePath.AUTO) -> Ideal:
    _check(I, J)
    if I.is_zero or J.is_zero:
        return Ideal.zero(I.context)
    if I.has_unit_generator():
        return J
    if J.has_unit_generator():
        return I
    if use_monomial_kernel(path, I, J):
        return Ideal.from_monomial_ideal(mono_product(I.to_monomial_ideal(), J.to_monomial_ideal()))
    return Ideal(I.context, [(f * g).monic() for f in I.generators for g in J.generators])


# =============================================================================
# INTERSECTION / COLON
# =============================================================================


def ideal_intersection(I: Ideal, J: Ideal, path: ComputePath = ComputePath.AUTO) -> Ideal:
    """
    I ∩ J by elimination: the basis of t·I + (1 − t)·J under an order that
    eliminates t, restricted to its t-free elements.
    """
    _check(I, J)
    ctx = I.context
    if I.is_zero or J.is_zero:
        return Ideal.zero(ctx)
    if I.has_unit_generator():
        return J
    if J.has_unit_generator():
        return I
    if use_monomial_kernel(path, I, J):
        return Ideal.from_monomial_ideal(mono_intersection(I.to_monomial_ideal(), J.to_monomial_ideal()))

    aux = ctx.with_auxiliary_variable()
    t = Polynomial.variable(aux, aux.variables[0])
    one_minus_t = Polynomial.one(aux) - t
    lifted = [t * lift_polynomial(g, aux) for g in I.generators]
    lifted += [one_minus_t * lift_polynomial(h, aux) for h in J.generators]
    basis = groebner_basis(aux, lifted)

    kept = [project_polynomial(g, ctx) for g in basis.elements if not any(m[0] for m in g.monomials())]
    logger.debug(f"intersection in {ctx}: {len(basis)} eliminated basis elements, {len(kept)} kept")
    result = Ideal(ctx, kept)
    if ctx.order is MonomialOrder.DEGREVLEX:
        # the t-free part is already the reduced degrevlex basis of I ∩ J
        result._basis = GroebnerBasis(ctx, tuple(kept), basis.stats)
    return result


def _colon_by_polynomial(I: Ideal, f: Polynomial) -> Ideal:
    if f.is_constant:
        return I
    meet = ideal_intersection(I, Ideal(I.context, [f]), ComputePath.GROEBNER)
    return Ideal(I.context, [exact_divide(g, f) for g in meet.generators])


def ideal_colon(I: Ideal, J: Ideal, path: ComputePath = ComputePath.AUTO) -> Ideal:
    """(I : J) = ∩_j (I : f_j); (I : 0) is the unit ideal by convention."""
    _check(I, J)
    ctx = I.context
    if J.is_zero or I.has_unit_generator():
        return Ideal.unit(ctx)
    if use_monomial_kernel(path, I, J):
        return Ideal.from_monomial_ideal(mono_colon(I.to_monomial_ideal(), J.to_monomial_ideal()))

    colons: List[Ideal] = [_colon_by_polynomial(I, f) for f in J.generators]
    result = colons[0]
    for other in colons[1:]:
        result = ideal_intersection(result, other, ComputePath.GROEBNER)
    return result


# =============================================================================
# FROBENIUS BRACKET POWER
# =============================================================================


def bracket_power(I: Ideal, e: int, path: ComputePath = ComputePath.AUTO) -> Ideal:
    """I^[p^e], generated by the p^e-th powers of the generators of I."""
    if e < 0:
        raise ValueError("bracket exponent e must be non-negative")
    if e == 0 or I.is_zero:
        return I
    if use_monomial_kernel(path, I):
        return Ideal.from_monomial_ideal(mono_bracket(I.to_monomial_ideal(), I.context.characteristic**e))
    return Ideal(I.context, [poly_frobenius_power(g, e) for g in I.generators])
