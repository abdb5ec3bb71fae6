"""
Frobenius Ladder
Level-by-level ideal data for the algebra of Frobenius maps on E_S, S = R/I.

For each e the p^e-th Frobenius maps on E_S correspond to K_e = (I^[p^e] : I),
and the maps generated by lower levels correspond to

    L_e = sum over compositions (b1..bs) of e with parts < e of
          K_b1 · K_b2^[p^b1] · K_b3^[p^(b1+b2)] · ...

L_e is built with the recursion

    N_1 = K_1,   N_e = K_e + sum_{b=1}^{e-1} K_b · N_{e-b}^[p^b],
    L_e = N_e without the K_e term,

which splits a composition into its first part b and a composition of e-b.
The literal composition sum is kept as a verification path.

Level e escapes the subalgebra generated below e when K_e is not inside
L_e (raw verdict) or not inside L_e + I^[p^e] (mod-bracket verdict; elements
of I^[p^e] act as zero on E_S).
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Set, Tuple

from algebra.monomial import Monomial, monomial_lcm
from algebra.polynomial import Polynomial, render_polynomial
from algebra.ring import RingContext
from config import Config
from core.cache import MemoCache
from core.error_handling import COMPUTATION_ERRORS, ConfigurationError, ErrorContext, LevelDependencyError
from frobenius.compositions import Composition, compositions
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
    use_monomial_kernel,
)

logger = logging.getLogger(__name__)

# K_e values shared across engines and code paths, keyed by (ideal canonical form, p, e, path)
_K_MEMO = MemoCache(name="K_e")

ClosedForm = Callable[[RingContext, int], Ideal]


@dataclass
class FrobeniusConfig:
    """The ideal I of S = R/I, how far to climb, and how to compute."""

    ideal: Ideal
    e_max: int
    path: ComputePath = ComputePath.AUTO
    brute_force_l: bool = False
    workers: int = field(default_factory=lambda: Config.WORKERS)
    closed_form: Optional[ClosedForm] = None

    def __post_init__(self):
        self.path = ComputePath(self.path)
        if not isinstance(self.e_max, int) or self.e_max < 1:
            raise ConfigurationError(f"e_max must be a positive integer, got {self.e_max!r}")
        if self.workers < 1:
            raise ConfigurationError("workers must be at least 1")
        if self.ideal.is_zero:
            raise ConfigurationError("I = 0 is out of scope (S would be the whole power-series ring)")
        if self.ideal.is_unit():
            raise ConfigurationError("I is the unit ideal (S would be 0)")

    @property
    def ring(self) -> RingContext:
        return self.ideal.context


@dataclass
class LevelTimings:
    k_ms: float = 0.0
    l_ms: float = 0.0
    verdict_ms: float = 0.0
    total_ms: float = 0.0


@dataclass
class LevelRecord:
    e: int
    q: int
    path: str
    K: Optional[Ideal] = None
    N: Optional[Ideal] = None
    L: Optional[Ideal] = None
    contained_raw: Optional[bool] = None
    contained_mod_bracket: Optional[bool] = None
    witnesses: List[Polynomial] = field(default_factory=list)
    closed_form_match: Optional[bool] = None
    timings: LevelTimings = field(default_factory=LevelTimings)
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None

    def summary(self) -> str:
        if self.error:
            return f"e={self.e} q={self.q} FAILED: {self.error}"
        shown = ", ".join(render_polynomial(w) for w in self.witnesses[:3])
        return (
            f"e={self.e} q={self.q} path={self.path} raw={self.contained_raw} "
            f"mod_bracket={self.contained_mod_bracket} witnesses=[{shown}]"
        )


@dataclass
class FrobeniusLadder:
    config: FrobeniusConfig
    levels: Dict[int, LevelRecord] = field(default_factory=dict)

    def __getitem__(self, e: int) -> LevelRecord:
        return self.levels[e]

    def records(self) -> List[LevelRecord]:
        return [self.levels[e] for e in sorted(self.levels)]

    @property
    def failed(self) -> bool:
        return any(not r.ok for r in self.levels.values())


class FrobeniusEngine:
    """Memoized K_e, N_e, L_e and level verdicts for one FrobeniusConfig."""

    def __init__(self, config: FrobeniusConfig):
        self.config = config
        self.ideal = config.ideal
        self.context = config.ring
        self.p = self.context.characteristic
        self.path = config.path
        self._K: Dict[int, Ideal] = {}
        self._N: Dict[int, Ideal] = {}
        self._L: Dict[int, Ideal] = {}
        self._brackets: Dict[int, Ideal] = {}
        self._failed: Set[int] = set()

    @property
    def path_taken(self) -> str:
        return "monomial" if use_monomial_kernel(self.path, self.ideal) else "groebner"

    def _check_level(self, e: int) -> None:
        if not 1 <= e <= self.config.e_max:
            raise ConfigurationError(f"level {e} outside 1..{self.config.e_max}")

    # ---------------------------------------------------------------------
    # Building blocks
    # ---------------------------------------------------------------------

    def bracket_of_ideal(self, e: int) -> Ideal:
        if e not in self._brackets:
            self._brackets[e] = bracket_power(self.ideal, e, self.path)
        return self._brackets[e]

    def compute_K(self, e: int) -> Ideal:
        """K_e = (I^[p^e] : I)."""
        self._check_level(e)
        if e not in self._K:
            key = (self.ideal.canonical_key(), self.p, e, self.path_taken)
            self._K[e] = _K_MEMO.get_or_compute(key, lambda: ideal_colon(self.bracket_of_ideal(e), self.ideal, self.path))
        return self._K[e]

    def compositions(self, e: int) -> List[Composition]:
        return compositions(e)

    def twisted_product(self, c: Composition) -> Ideal:
        """K_b1 · K_b2^[p^b1] · ... · K_bs^[p^(b1+...+b_{s-1})]."""
        result = None
        for part, twist in zip(c.parts, c.twists):
            factor = bracket_power(self.compute_K(part), twist, self.path)
            result = factor if result is None else ideal_product(result, factor, self.path)
        return result

    def compute_N(self, e: int) -> Ideal:
        """N_e = K_e + L_e: the sum over all compositions of e, singleton included."""
        self._check_level(e)
        if e in self._N:
            return self._N[e]
        if e in self._failed:
            raise LevelDependencyError(f"N_{e} is unavailable because level {e} failed")
        self._N[e] = ideal_sum(self.compute_K(e), self.compute_L(e), self.path)
        return self._N[e]

    def compute_L(self, e: int) -> Ideal:
        """L_e by the recursion; L_1 is the zero ideal."""
        self._check_level(e)
        if e in self._L:
            return self._L[e]
        if e == 1:
            self._L[e] = Ideal.zero(self.context)
            return self._L[e]

        for k in range(1, e):
            self.compute_N(k)
        summands = self._summands(e)
        result = Ideal.zero(self.context)
        for b in sorted(summands):
            result = ideal_sum(result, summands[b], self.path)
        self._L[e] = result
        return result

    def _summand(self, e: int, b: int) -> Ideal:
        return ideal_product(self._K[b], bracket_power(self._N[e - b], b, self.path), self.path)

    def _summands(self, e: int) -> Dict[int, Ideal]:
        bs = list(range(1, e))
        if self.config.workers == 1 or len(bs) == 1:
            return {b: self._summand(e, b) for b in bs}

        results: Dict[int, Ideal] = {}
        with ThreadPoolExecutor(max_workers=self.config.workers) as executor:
            future_to_b = {executor.submit(self._summand, e, b): b for b in bs}
            for future in as_completed(future_to_b):
                results[future_to_b[future]] = future.result()
        return results

    def compute_L_brute_force(self, e: int) -> Ideal:
        """L_e as the literal sum of twisted products over compositions(e)."""
        self._check_level(e)
        result = Ideal.zero(self.context)
        for c in compositions(e):
            result = ideal_sum(result, self.twisted_product(c), self.path)
        return result

    # ---------------------------------------------------------------------
    # Verdicts
    # ---------------------------------------------------------------------

    def finite_generation_step(self, e: int) -> LevelRecord:
        self._check_level(e)
        record = LevelRecord(e=e, q=self.p**e, path=self.path_taken)
        start = time.perf_counter()

        K = self.compute_K(e)
        record.K = K
        t_k = time.perf_counter()

        if self.config.brute_force_l:
            L = self.compute_L_brute_force(e)
        else:
            L = self.compute_L(e)
            record.N = self.compute_N(e)
        record.L = L
        t_l = time.perf_counter()

        target = ideal_sum(L, self.bracket_of_ideal(e), self.path)
        key = self.context.key
        canonical = sorted(K.canonical_generators(), key=lambda g: key(g.leading_monomial))
        record.witnesses = [g for g in canonical if not ideal_membership(g, target, self.path)]
        record.contained_mod_bracket = not record.witnesses
        # L_e ⊆ L_e + I^[q], so a failed mod-bracket test settles the raw one
        record.contained_raw = ideal_contains(L, K, self.path) if record.contained_mod_bracket else False

        if self.config.closed_form is not None:
            record.closed_form_match = ideal_equal(K, self.config.closed_form(self.context, record.q))
        t_v = time.perf_counter()

        record.timings = LevelTimings(
            k_ms=(t_k - start) * 1000,
            l_ms=(t_l - t_k) * 1000,
            verdict_ms=(t_v - t_l) * 1000,
            total_ms=(t_v - start) * 1000,
        )
        return record

    def run(self) -> FrobeniusLadder:
        ladder = FrobeniusLadder(self.config)
        for e in range(1, self.config.e_max + 1):
            record = None
            with ErrorContext(f"ladder level e={e}", reraise=False, exceptions=COMPUTATION_ERRORS) as ctx:
                record = self.finite_generation_step(e)
            if ctx.error is not None:
                record = LevelRecord(e=e, q=self.p**e, path=self.path_taken, K=self._K.get(e), error=str(ctx.error))
                if e not in self._N:
                    self._failed.add(e)
            ladder.levels[e] = record
            logger.info(record.summary())
        return ladder


def run_ladder(config: FrobeniusConfig) -> FrobeniusLadder:
    """Level records for e = 1..e_max."""
    logger.info(
        f"Frobenius ladder: I = {config.ideal} in {config.ring}, e_max={config.e_max}, path={config.path.value}"
    )
    return FrobeniusEngine(config).run()


# =============================================================================
# COLON CHAIN (step-by-step K_e)
# =============================================================================


@dataclass
class ColonChain:
    """I^[q], the colon by each generator of I, and their intersection K_e."""

    bracket: Ideal
    colons: List[Tuple[Polynomial, Ideal]]
    intersection: Ideal
    # monomial input only: the lcms of the last intersection step before pruning
    unpruned: Optional[List[Monomial]] = None


def colon_chain(ideal: Ideal, e: int, path: ComputePath = ComputePath.AUTO) -> ColonChain:
    bracket = bracket_power(ideal, e, path)
    colons = [(g, ideal_colon(bracket, Ideal(ideal.context, [g]), path)) for g in ideal.generators]
    meet = colons[0][1]
    unpruned = None
    for _, other in colons[1:]:
        if meet.is_monomial and other.is_monomial:
            unpruned = sorted(
                {monomial_lcm(a.leading_monomial, b.leading_monomial) for a in meet for b in other},
                key=ideal.context.key,
                reverse=True,
            )
        meet = ideal_intersection(meet, other, path)
    return ColonChain(bracket=bracket, colons=colons, intersection=meet, unpruned=unpruned)
