"""
RingContext: GF(p)[x1..xn] with a fixed monomial order.

Stands in for the power-series ring K[[x1..xn]]: every ideal handled here is
polynomially generated, and containments/colons among such ideals are the same
in the polynomial ring and in its completion.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Sequence, Tuple

from algebra.field import PrimeField, check_characteristic
from algebra.monomial import Monomial, MonomialOrder, OrderKey, heap_key, order_key
from config import Config
from core.error_handling import ConfigurationError

VARIABLE_NAME = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


@dataclass(frozen=True)
class RingContext:
    characteristic: int
    variables: Tuple[str, ...]
    order: MonomialOrder = field(default_factory=lambda: MonomialOrder(Config.DEFAULT_ORDER))

    def __post_init__(self):
        check_characteristic(self.characteristic)
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "order", MonomialOrder(self.order))
        if not self.variables:
            raise ConfigurationError("a ring needs at least one variable")
        for name in self.variables:
            if not isinstance(name, str) or not VARIABLE_NAME.match(name):
                raise ConfigurationError(f"invalid variable name {name!r}")
        if len(set(self.variables)) != len(self.variables):
            raise ConfigurationError(f"duplicate variable names in {self.variables}")

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def prime_field(self) -> PrimeField:
        return PrimeField(self.characteristic)

    @property
    def key(self) -> Callable[[Monomial], OrderKey]:
        return order_key(self.order)

    @property
    def heap_key(self) -> Callable[[Monomial], OrderKey]:
        return heap_key(self.order)

    @property
    def one_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def variable_monomial(self, name: str) -> Monomial:
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return tuple(exps)

    def with_order(self, order: MonomialOrder) -> "RingContext":
        return RingContext(self.characteristic, self.variables, order)

    def with_auxiliary_variable(self) -> "RingContext":
        """Prepend a fresh variable and switch to the order that eliminates it."""
        name, suffix = "t", 0
        while name in self.variables:
            name, suffix = f"t{suffix}", suffix + 1
        return RingContext(self.characteristic, (name, *self.variables), MonomialOrder.ELIMINATION)

    def __str__(self) -> str:
        return f"GF({self.characteristic})[{', '.join(self.variables)}] ({self.order.value})"


def make_ring(p: int, variables: Sequence[str], order: str = "") -> RingContext:
    return RingContext(p, tuple(variables), MonomialOrder(order or Config.DEFAULT_ORDER))
