"""
Compositions of e: ordered tuples of positive parts summing to e.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Tuple


@dataclass(frozen=True)
class Composition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts or any(b < 1 for b in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def twists(self) -> Tuple[int, ...]:
        """Prefix sums b1 + ... + b_{j-1}: the bracket exponent of the j-th factor (0 for the first)."""
        out, acc = [], 0
        for b in self.parts:
            out.append(acc)
            acc += b
        return tuple(out)

    def is_admissible(self, e: int) -> bool:
        """Usable in L_e: parts sum to e and every part is below e (so there are at least two parts)."""
        return self.total == e and all(b < e for b in self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(b) for b in self.parts) + ")"


def _compositions(remaining: int, max_part: int) -> Iterator[Tuple[int, ...]]:
    for first in range(1, min(remaining, max_part) + 1):
        if first == remaining:
            yield (first,)
        else:
            for rest in _compositions(remaining - first, max_part):
                yield (first, *rest)


@lru_cache(maxsize=32)
def _cached(e: int) -> Tuple[Composition, ...]:
    return tuple(Composition(parts) for parts in _compositions(e, e - 1))


def compositions(e: int) -> List[Composition]:
    """All compositions of e with every part in [1, e-1], lexicographic; empty for e = 1."""
    if e < 1:
        raise ValueError("e must be positive")
    return list(_cached(e))
