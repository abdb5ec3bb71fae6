"""
Ideal: a finite generator list in a RingContext with a lazily computed,
thread-safe cached reduced Gröbner basis.
"""

from __future__ import annotations

import logging
import threading
from enum import Enum
from typing import Iterable, Iterator, List, Optional, Tuple

from algebra.polynomial import Polynomial, render_polynomial
from algebra.ring import RingContext
from core.error_handling import ContextMismatchError
from groebner.buchberger import GroebnerBasis, buchberger
from monomials.kernel import MonomialIdeal, mono_minimalize

logger = logging.getLogger(__name__)


class ComputePath(str, Enum):
    """Which engine runs an ideal operation."""

    AUTO = "auto"  # monomial kernel when every input is monomial, Gröbner engine otherwise
    MONOMIAL = "monomial"
    GROEBNER = "groebner"


class Ideal:
    """Ideal of GF(p)[x1..xn] given by generators."""

    def __init__(self, context: RingContext, generators: Iterable[Polynomial] = ()):
        gens: List[Polynomial] = []
        seen = set()
        for g in generators:
            if g.context != context:
                raise ContextMismatchError(f"generator {g!r} does not live in {context}")
            if g.is_zero or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        self.context = context
        self._generators: Tuple[Polynomial, ...] = tuple(gens)
        self._basis: Optional[GroebnerBasis] = None
        self._monomial: Optional[MonomialIdeal] = None
        self._lock = threading.Lock()

    # ---------------------------------------------------------------------
    # Constructors
    # ---------------------------------------------------------------------

    @classmethod
    def zero(cls, context: RingContext) -> "Ideal":
        return cls(context, ())

    @classmethod
    def unit(cls, context: RingContext) -> "Ideal":
        return cls(context, (Polynomial.one(context),))

    @classmethod
    def from_monomial_ideal(cls, mono: MonomialIdeal) -> "Ideal":
        ideal = cls(mono.context, (Polynomial.from_monomial(mono.context, g) for g in mono.generators))
        ideal._monomial = mono
        return ideal

    @classmethod
    def from_basis(cls, basis: GroebnerBasis) -> "Ideal":
        ideal = cls(basis.context, basis.elements)
        ideal._basis = basis
        return ideal

    # ---------------------------------------------------------------------
    # Properties
    # ---------------------------------------------------------------------

    @property
    def generators(self) -> Tuple[Polynomial, ...]:
        return self._generators

    @property
    def is_zero(self) -> bool:
        return not self._generators

    @property
    def is_monomial(self) -> bool:
        return all(g.is_monomial for g in self._generators)

    @property
    def has_cached_basis(self) -> bool:
        return self._basis is not None

    def has_unit_generator(self) -> bool:
        return any(g.is_constant for g in self._generators)

    def is_unit(self) -> bool:
        if self.has_unit_generator():
            return True
        if self.is_monomial:
            return self.to_monomial_ideal().is_unit
        return self.groebner_basis().is_unit

    def is_proper(self) -> bool:
        return not self.is_unit()

    def __len__(self) -> int:
        return len(self._generators)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self._generators)

    # ---------------------------------------------------------------------
    # Canonical forms
    # ---------------------------------------------------------------------

    def groebner_basis(self) -> GroebnerBasis:
        """Reduced basis, computed at most once even under concurrent callers."""
        if self._basis is not None:
            return self._basis
        with self._lock:
            if self._basis is None:
                self._basis = buchberger(self)
        return self._basis

    def to_monomial_ideal(self) -> MonomialIdeal:
        if self._monomial is None:
            if not self.is_monomial:
                raise ValueError("ideal has non-monomial generators")
            self._monomial = mono_minimalize(self.context, (g.leading_monomial for g in self._generators))
        return self._monomial

    def canonical_generators(self) -> Tuple[Polynomial, ...]:
        """Minimal monomial generators for monomial ideals, the reduced basis otherwise."""
        if self.is_monomial:
            mono = self.to_monomial_ideal()
            return tuple(Polynomial.from_monomial(self.context, g) for g in mono.generators)
        return self.groebner_basis().elements

    def canonical_key(self) -> tuple:
        if self.is_monomial:
            return ("monomial", self.context, self.to_monomial_ideal().generators)
        return ("groebner", self.context, self.groebner_basis().key())

    def reduced(self) -> "Ideal":
        """The same ideal, re-generated by its canonical generators."""
        if self.is_monomial:
            return Ideal.from_monomial_ideal(self.to_monomial_ideal())
        return Ideal.from_basis(self.groebner_basis())

    def __str__(self) -> str:
        return "(" + ", ".join(render_polynomial(g) for g in self._generators) + ")"

    def __repr__(self) -> str:
        return f"Ideal{self} in {self.context}"
