"""
Groebner bases: Buchberger's algorithm over GF(p).

Improved Buchberger with the Gebauer–Möller pair update (coprime leading
monomials and the chain criterion) and the normal selection strategy
(smallest lcm first). The output is the reduced, monic basis, which is unique
for a given ideal and monomial order and therefore serves as its canonical form.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterator, List, Optional, Sequence, Set, Tuple

from algebra.monomial import Monomial, coprime, monomial_div, monomial_divides, monomial_lcm
from algebra.polynomial import Polynomial, render_polynomial
from algebra.reduction import reduce_polynomial
from algebra.ring import RingContext
from config import Config
from core.error_handling import ExponentOverflowError, ResourceLimitError

if TYPE_CHECKING:
    from groebner.ideal import Ideal

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass
class BuchbergerStats:
    """Counters for one Buchberger run."""

    pairs_selected: int = 0
    pairs_skipped: int = 0
    zero_reductions: int = 0
    basis_peak: int = 0

    def to_dict(self) -> dict:
        return {
            "pairs_selected": self.pairs_selected,
            "pairs_skipped": self.pairs_skipped,
            "zero_reductions": self.zero_reductions,
            "basis_peak": self.basis_peak,
        }


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced monic Gröbner basis, sorted descending by leading monomial."""

    context: RingContext
    elements: Tuple[Polynomial, ...]
    stats: BuchbergerStats = field(default_factory=BuchbergerStats, compare=False, repr=False)

    @property
    def order(self):
        return self.context.order

    @property
    def is_zero(self) -> bool:
        return not self.elements

    @property
    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial for g in self.elements]

    def reduce(self, f: Polynomial) -> Polynomial:
        return reduce_polynomial(f, self.elements)

    def contains(self, f: Polynomial) -> bool:
        return reduce_polynomial(f, self.elements).is_zero

    def key(self) -> tuple:
        return tuple(g.terms for g in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.elements)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """lcm/LT(f)·f − lcm/LT(g)·g for monic f, g."""
    lcm = monomial_lcm(f.leading_monomial, g.leading_monomial)
    return f.mul_term(monomial_div(lcm, f.leading_monomial)) - g.mul_term(monomial_div(lcm, g.leading_monomial))


# =============================================================================
# BUCHBERGER
# =============================================================================


def buchberger(ideal: "Ideal") -> GroebnerBasis:
    """Reduced Gröbner basis of an Ideal under its ring's order."""
    return groebner_basis(ideal.context, ideal.generators)


def groebner_basis(
    context: RingContext,
    polys: Sequence[Polynomial],
    max_basis_size: Optional[int] = None,
    max_pairs: Optional[int] = None,
) -> GroebnerBasis:
    max_basis_size = max_basis_size or Config.MAX_BASIS_SIZE
    max_pairs = max_pairs or Config.MAX_PAIRS
    key = context.key
    stats = BuchbergerStats()

    seen = set()
    f: List[Polynomial] = []
    for poly in polys:
        if poly.is_zero:
            continue
        h = poly.monic()
        if h.is_constant:
            return _unit_basis(context, stats)
        if h not in seen:
            seen.add(h)
            f.append(h)
    if not f:
        return GroebnerBasis(context, (), stats)

    # generator order must not matter: start from the sorted, deduplicated list
    f.sort(key=lambda h: (key(h.leading_monomial), h.terms))
    index = {h: i for i, h in enumerate(f)}

    def lm(i: int) -> Monomial:
        return f[i].leading_monomial

    def update(G: List[int], B: Set[Pair], ih: int) -> Tuple[List[int], Set[Pair]]:
        # [Becker–Weispfenning] UPDATE: filter new pairs (h, g), then old pairs, then G
        mh = lm(ih)
        C = list(G)
        D: List[Pair] = []
        while C:
            ig = C.pop()
            mg = lm(ig)
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip: int) -> bool:
                return monomial_divides(monomial_lcm(mh, lm(ip)), lcm_hg)

            if coprime(mh, mg) or (
                not any(lcm_divides(ipx) for ipx in C) and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.append((ih, ig))
            else:
                stats.pairs_skipped += 1

        E = set()
        for pair in D:
            if coprime(mh, lm(pair[1])):
                stats.pairs_skipped += 1
            else:
                E.add(pair)

        B_new = set()
        for ig1, ig2 in B:
            lcm12 = monomial_lcm(lm(ig1), lm(ig2))
            if (
                not monomial_divides(mh, lcm12)
                or monomial_lcm(lm(ig1), mh) == lcm12
                or monomial_lcm(lm(ig2), mh) == lcm12
            ):
                B_new.add((ig1, ig2))
            else:
                stats.pairs_skipped += 1
        B_new |= E

        G_new = [ig for ig in G if not monomial_divides(mh, lm(ig))]
        G_new.append(ih)
        return G_new, B_new

    def select(B: Set[Pair]) -> Pair:
        # normal strategy, ties broken by indices for determinism
        return min(B, key=lambda pr: (key(monomial_lcm(lm(pr[0]), lm(pr[1]))), pr))

    G: List[int] = []
    B: Set[Pair] = set()
    for i in range(len(f)):
        G, B = update(G, B, i)

    while B:
        if stats.pairs_selected >= max_pairs:
            raise ResourceLimitError(f"Buchberger exceeded {max_pairs} S-pairs ({len(f)} polynomials so far)")
        ig1, ig2 = select(B)
        B.remove((ig1, ig2))
        stats.pairs_selected += 1

        try:
            s = s_polynomial(f[ig1], f[ig2])
            # reducing against ascending leading monomials is on average faster
            divisors = [f[g] for g in sorted(G, key=lambda g: key(lm(g)))]
            h = reduce_polynomial(s, divisors)
        except ExponentOverflowError as exc:
            raise ExponentOverflowError(
                f"{exc} while reducing the S-pair ({render_polynomial(f[ig1])}, {render_polynomial(f[ig2])})"
            ) from exc

        if h.is_zero:
            stats.zero_reductions += 1
            continue
        h = h.monic()
        if h.is_constant:
            return _unit_basis(context, stats)
        if h not in index:
            index[h] = len(f)
            f.append(h)
            if len(f) > max_basis_size:
                raise ResourceLimitError(f"Buchberger basis grew past {max_basis_size} polynomials")
        stats.basis_peak = max(stats.basis_peak, len(G) + 1)
        G, B = update(G, B, index[h])

    # interreduce: G has minimal leading monomials, so reducing tails yields the reduced basis
    reduced = []
    for ig in G:
        others = [f[j] for j in G if j != ig]
        r = reduce_polynomial(f[ig], others).monic()
        if not r.is_zero:
            reduced.append(r)
    reduced.sort(key=lambda g: key(g.leading_monomial), reverse=True)

    logger.debug(f"Buchberger in {context}: {len(reduced)} elements, stats {stats.to_dict()}")
    return GroebnerBasis(context, tuple(reduced), stats)


def _unit_basis(context: RingContext, stats: BuchbergerStats) -> GroebnerBasis:
    return GroebnerBasis(context, (Polynomial.one(context),), stats)


def is_groebner_basis(elements: Sequence[Polynomial]) -> bool:
    """Every S-polynomial of element pairs reduces to zero."""
    elements = list(elements)
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            s = s_polynomial(elements[i].monic(), elements[j].monic())
            if not reduce_polynomial(s, elements).is_zero:
                return False
    return True
