"""
Monomial Kernel
Exact combinatorics for monomial ideals.

A monomial ideal is canonically its minimal generating set (the divisibility
antichain), so every operation here runs in integer arithmetic with no
Gröbner basis. The kernel doubles as an independent oracle for the general
engine.

Divisibility screening is vectorized over an int64 exponent matrix; the
exponent ceiling keeps every sum in range.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from algebra.monomial import Monomial, check_exponents, monomial_lcm, monomial_mul, monomial_pow
from algebra.ring import RingContext
from core.error_handling import ContextMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal generators, sorted descending in the ring order."""

    context: RingContext
    generators: Tuple[Monomial, ...]

    @cached_property
    def matrix(self) -> np.ndarray:
        if not self.generators:
            return np.zeros((0, self.context.nvars), dtype=np.int64)
        return np.array(self.generators, dtype=np.int64)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.generators)

    def __contains__(self, m: Monomial) -> bool:
        return mono_membership(m, self)

    def __str__(self) -> str:
        from algebra.polynomial import render_monomial

        return "(" + ", ".join(render_monomial(g, self.context.variables) for g in self.generators) + ")"


def _check(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.context != J.context:
        raise ContextMismatchError(f"{I.context} vs {J.context}")


def _check_width(m: Sequence[int], context: RingContext) -> None:
    if len(m) != context.nvars:
        raise ContextMismatchError(f"monomial width {len(m)} does not match {context.nvars} variables")


# =============================================================================
# CANONICAL FORM
# =============================================================================


def mono_minimalize(context: RingContext, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Reduce a monomial list to its divisibility antichain, sorted descending."""
    unique = set()
    for g in gens:
        g = tuple(g)
        _check_width(g, context)
        unique.add(check_exponents(g))
    if not unique:
        return MonomialIdeal(context, ())

    key = context.key
    # a divisor never has larger degree, so scanning by ascending degree sees divisors first
    candidates = sorted(unique, key=lambda m: (sum(m), key(m)))
    matrix = np.array(candidates, dtype=np.int64)
    kept: List[int] = []
    for i in range(len(candidates)):
        if kept and np.any(np.all(matrix[kept] <= matrix[i], axis=1)):
            continue
        kept.append(i)
    minimal = sorted((candidates[i] for i in kept), key=key, reverse=True)
    return MonomialIdeal(context, tuple(minimal))


def mono_unit(context: RingContext) -> MonomialIdeal:
    return MonomialIdeal(context, (context.one_monomial,))


def mono_zero(context: RingContext) -> MonomialIdeal:
    return MonomialIdeal(context, ())


# =============================================================================
# OPERATIONS
# =============================================================================


def mono_membership(m: Sequence[int], I: MonomialIdeal) -> bool:
    """True iff some generator divides m."""
    _check_width(m, I.context)
    if I.is_zero:
        return False
    row = np.asarray(m, dtype=np.int64)
    return bool(np.any(np.all(I.matrix <= row, axis=1)))


def mono_contains(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """J ⊆ I."""
    _check(I, J)
    return all(mono_membership(g, I) for g in J.generators)


def mono_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check(I, J)
    return mono_minimalize(I.context, I.generators + J.generators)


def mono_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check(I, J)
    return mono_minimalize(I.context, (monomial_mul(a, b) for a in I.generators for b in J.generators))


def mono_intersection(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Pairwise lcms of generators."""
    _check(I, J)
    return mono_minimalize(I.context, (monomial_lcm(a, b) for a in I.generators for b in J.generators))


def mono_colon_monomial(I: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """(I : m) is generated by g / gcd(g, m)."""
    _check_width(m, I.context)
    return mono_minimalize(I.context, (tuple(max(a - b, 0) for a, b in zip(g, m)) for g in I.generators))


def mono_colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """(I : J) as the intersection of the colons by each generator of J; (I : 0) is the unit ideal."""
    _check(I, J)
    result = mono_unit(I.context)
    for m in J.generators:
        result = mono_intersection(result, mono_colon_monomial(I, m))
        if result.is_zero:
            break
    return result


def mono_bracket(I: MonomialIdeal, q: int) -> MonomialIdeal:
    """I^[q]: every generator raised to the q-th power."""
    if q < 1:
        raise ValueError("bracket power needs q >= 1")
    return mono_minimalize(I.context, (monomial_pow(g, q) for g in I.generators))
