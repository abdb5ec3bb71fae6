"""
Multivariate division: normal forms, remainders and exact quotients.

Deterministic: the largest remaining term is treated first and divisors are
tried in list order.
"""

from __future__ import annotations

import heapq
from typing import Dict, List, Optional, Sequence, Tuple

from algebra.monomial import Monomial
from algebra.polynomial import Polynomial, render_polynomial
from config import Config
from core.error_handling import ContextMismatchError, ExponentOverflowError, InternalError


def _divide(
    f: Polynomial, divisors: Sequence[Polynomial], track_cofactors: bool
) -> Tuple[Polynomial, Optional[List[Dict[Monomial, int]]]]:
    ctx = f.context
    p = ctx.characteristic
    hkey = ctx.heap_key
    limit = Config.MAX_EXPONENT

    reducers = []
    for g in divisors:
        if g.context != ctx:
            raise ContextMismatchError(f"divisor lives in {g.context}, dividend in {ctx}")
        if g.is_zero:
            raise ValueError("cannot divide by the zero polynomial")
        lm = g.leading_monomial
        lc_inv = pow(g.leading_coefficient, -1, p)
        gmax = max(max(m) for m, _ in g.terms)
        reducers.append((lm, lc_inv, g.terms[1:], gmax))

    work: Dict[Monomial, int] = dict(f.terms)
    heap = [(hkey(m), m) for m in work]
    heapq.heapify(heap)
    remainder: List[Tuple[Monomial, int]] = []
    cofactors: Optional[List[Dict[Monomial, int]]] = [{} for _ in reducers] if track_cofactors else None

    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, 0)
        if not c:
            continue
        for idx, (lm, lc_inv, tail, gmax) in enumerate(reducers):
            shift = tuple(a - b for a, b in zip(m, lm))
            if min(shift) < 0:
                continue
            if max(shift) + gmax > limit:
                raise ExponentOverflowError(f"reduction step exceeds exponent ceiling {limit}")
            factor = c * lc_inv % p
            if cofactors is not None:
                cof = cofactors[idx]
                cof[shift] = (cof.get(shift, 0) + factor) % p
            for gm, gc in tail:
                nm = tuple(a + b for a, b in zip(gm, shift))
                old = work.get(nm)
                if old is None:
                    work[nm] = -factor * gc % p
                    heapq.heappush(heap, (hkey(nm), nm))
                else:
                    new = (old - factor * gc) % p
                    if new:
                        work[nm] = new
                    else:
                        del work[nm]
            break
        else:
            remainder.append((m, c))

    # popped in descending order, so the remainder is already canonical
    return Polynomial._from_canonical(ctx, tuple(remainder)), cofactors


def normal_form(f: Polynomial, divisors: Sequence[Polynomial]) -> Tuple[Polynomial, List[Polynomial]]:
    """
    Divide f by divisors.

    Returns (remainder, cofactors) with f = sum(cofactors[i] * divisors[i]) + remainder
    and no term of remainder divisible by any leading monomial of divisors.
    """
    remainder, cofactors = _divide(f, divisors, track_cofactors=True)
    return remainder, [Polynomial(f.context, cof) for cof in cofactors]


def reduce_polynomial(f: Polynomial, divisors: Sequence[Polynomial]) -> Polynomial:
    """Remainder of f modulo divisors, skipping cofactor bookkeeping."""
    if f.is_zero or not divisors:
        return f
    remainder, _ = _divide(f, divisors, track_cofactors=False)
    return remainder


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """The quotient f / g; raises InternalError when g does not divide f."""
    remainder, cofactors = normal_form(f, [g])
    if not remainder.is_zero:
        raise InternalError(f"{render_polynomial(g)} does not divide {render_polynomial(f)}")
    return cofactors[0]
