"""
Prime fields GF(p) and their elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from sympy import isprime

from core.error_handling import NonPrimeCharacteristicError


@lru_cache(maxsize=64)
def check_characteristic(p: int) -> int:
    """Return p if it is prime, raise NonPrimeCharacteristicError otherwise."""
    if isinstance(p, bool) or not isinstance(p, int) or p < 2 or not isprime(p):
        raise NonPrimeCharacteristicError(f"non-prime characteristic: {p!r}")
    return p


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(p), stored as its residue in [0, p)."""

    residue: int
    p: int

    def __post_init__(self):
        if not 0 <= self.residue < self.p:
            object.__setattr__(self, "residue", self.residue % self.p)

    def _coerce(self, other: Union["FieldElement", int]) -> int:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ValueError(f"cannot mix GF({self.p}) and GF({other.p})")
            return other.residue
        return other % self.p

    def __add__(self, other):
        return FieldElement((self.residue + self._coerce(other)) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement((self.residue - self._coerce(other)) % self.p, self.p)

    def __rsub__(self, other):
        return FieldElement((self._coerce(other) - self.residue) % self.p, self.p)

    def __neg__(self):
        return FieldElement(-self.residue % self.p, self.p)

    def __mul__(self, other):
        return FieldElement(self.residue * self._coerce(other) % self.p, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * FieldElement(self._coerce(other), self.p).inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FieldElement(pow(self.residue, k, self.p), self.p)

    def __bool__(self) -> bool:
        return self.residue != 0

    def __int__(self) -> int:
        return self.residue

    def inverse(self) -> "FieldElement":
        if self.residue == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return FieldElement(pow(self.residue, -1, self.p), self.p)

    def __str__(self) -> str:
        return str(self.residue)


@dataclass(frozen=True)
class PrimeField:
    """GF(p). Polynomials keep raw residues; this class does the arithmetic on them."""

    p: int

    def __post_init__(self):
        check_characteristic(self.p)

    def __call__(self, n: int) -> FieldElement:
        return FieldElement(n % self.p, self.p)

    def normalize(self, n: int) -> int:
        return n % self.p

    def inverse(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return pow(a, -1, self.p)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self.p)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self.p)

    def __str__(self) -> str:
        return f"GF({self.p})"
