"""
Exponent-vector monomials and monomial orders.

A monomial is a plain tuple of non-negative ints, one slot per ring variable.
Order keys are flat int tuples, so negating every entry reverses the order;
reduction uses that to drive a min-heap as a max-heap.
"""

from __future__ import annotations

from enum import Enum, IntEnum
from functools import lru_cache
from typing import Callable, Optional, Sequence, Tuple

from config import Config
from core.error_handling import ContextMismatchError, ExponentOverflowError

Monomial = Tuple[int, ...]
OrderKey = Tuple[int, ...]


class MonomialOrder(str, Enum):
    """Supported monomial orders."""

    LEX = "lex"
    GRLEX = "grlex"
    DEGREVLEX = "degrevlex"
    ELIMINATION = "elim"  # first variable eliminated, degrevlex on the rest


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


# =============================================================================
# CHECKED ARITHMETIC
# =============================================================================


def check_exponents(m: Monomial) -> Monomial:
    """Raise ExponentOverflowError if any exponent is negative or above the ceiling."""
    if m and (max(m) > Config.MAX_EXPONENT or min(m) < 0):
        raise ExponentOverflowError(f"exponent out of range in {m} (ceiling {Config.MAX_EXPONENT})")
    return m


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return check_exponents(tuple(x + y for x, y in zip(a, b)))


def monomial_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """a / b, or None when b does not divide a."""
    q = tuple(x - y for x, y in zip(a, b))
    if min(q, default=0) < 0:
        return None
    return q


def monomial_divides(b: Monomial, a: Monomial) -> bool:
    """True iff b | a."""
    return all(x <= y for x, y in zip(b, a))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def monomial_pow(a: Monomial, k: int) -> Monomial:
    if k < 0:
        raise ValueError("negative monomial power")
    limit = Config.MAX_EXPONENT
    if a and max(a) > limit // max(k, 1):
        raise ExponentOverflowError(f"{a}^{k} exceeds exponent ceiling {limit}")
    return tuple(x * k for x in a)


def monomial_degree(a: Monomial) -> int:
    return sum(a)


def coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


# =============================================================================
# ORDER KEYS
# =============================================================================


@lru_cache(maxsize=1 << 18)
def lex_key(m: Monomial) -> OrderKey:
    return m


@lru_cache(maxsize=1 << 18)
def grlex_key(m: Monomial) -> OrderKey:
    return (sum(m), *m)


@lru_cache(maxsize=1 << 18)
def degrevlex_key(m: Monomial) -> OrderKey:
    # higher degree wins; on ties the smaller exponent on the last variable wins
    return (sum(m), *(-x for x in reversed(m)))


@lru_cache(maxsize=1 << 18)
def elimination_key(m: Monomial) -> OrderKey:
    return (m[0], sum(m[1:]), *(-x for x in reversed(m[1:])))


_ORDER_KEYS: dict[MonomialOrder, Callable[[Monomial], OrderKey]] = {
    MonomialOrder.LEX: lex_key,
    MonomialOrder.GRLEX: grlex_key,
    MonomialOrder.DEGREVLEX: degrevlex_key,
    MonomialOrder.ELIMINATION: elimination_key,
}


def order_key(order: MonomialOrder) -> Callable[[Monomial], OrderKey]:
    return _ORDER_KEYS[MonomialOrder(order)]


def _descending(key: Callable[[Monomial], OrderKey]) -> Callable[[Monomial], OrderKey]:
    @lru_cache(maxsize=1 << 18)
    def neg(m: Monomial) -> OrderKey:
        return tuple(-x for x in key(m))

    return neg


_HEAP_KEYS = {order: _descending(key) for order, key in _ORDER_KEYS.items()}


def heap_key(order: MonomialOrder) -> Callable[[Monomial], OrderKey]:
    """Key whose ascending order is the descending monomial order."""
    return _HEAP_KEYS[MonomialOrder(order)]


def mono_compare(a: Sequence[int], b: Sequence[int], order: MonomialOrder = MonomialOrder.DEGREVLEX) -> Ordering:
    if len(a) != len(b):
        raise ContextMismatchError(f"monomial widths differ: {len(a)} vs {len(b)}")
    key = order_key(order)
    ka, kb = key(tuple(a)), key(tuple(b))
    if ka == kb:
        return Ordering.EQUAL
    return Ordering.GREATER if ka > kb else Ordering.LESS
