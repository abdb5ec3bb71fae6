"""
Built-in problems.

paper-monomial       I = (xy, yz) in K[[x, y, z]]: the algebra of Frobenius
                     maps on E_S is not finitely generated.
paper-determinantal  I = 2x2 minors of [[x, y, z], [u, v, w]]: the
                     conjectured normal Cohen–Macaulay counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from algebra.polynomial import Polynomial
from algebra.ring import RingContext
from core.error_handling import ProblemSyntaxError
from groebner.ideal import Ideal


def minors_2x2(top: Sequence[str], bottom: Sequence[str]) -> List[str]:
    """2x2 minors of a 2 x n matrix of variables, columns (i, j) in lexicographic order."""
    return [f"{top[i]}*{bottom[j]} - {top[j]}*{bottom[i]}" for i, j in combinations(range(len(top)), 2)]


def monomial_closed_form(context: RingContext, q: int) -> Ideal:
    """(x^q y^(q-1), x^(q-1) y^(q-1) z^(q-1), y^(q-1) z^q): K_e of (xy, yz) at q = p^e."""
    x, y, z = (context.index(name) for name in ("x", "y", "z"))

    def mono(ax: int, ay: int, az: int) -> Polynomial:
        exps = [0] * context.nvars
        exps[x], exps[y], exps[z] = ax, ay, az
        return Polynomial.from_monomial(context, exps)

    return Ideal(context, [mono(q, q - 1, 0), mono(q - 1, q - 1, q - 1), mono(0, q - 1, q)])


@dataclass(frozen=True)
class Preset:
    name: str
    p: int
    variables: Tuple[str, ...]
    generators: Tuple[str, ...]
    e_max: int
    description: str
    closed_form: Optional[Callable[[RingContext, int], Ideal]] = None


PRESETS: Dict[str, Preset] = {
    "paper-monomial": Preset(
        name="paper-monomial",
        p=2,
        variables=("x", "y", "z"),
        generators=("x*y", "y*z"),
        e_max=3,
        description="I = (xy, yz); K_e escapes L_e + I^[q] at every level",
        closed_form=monomial_closed_form,
    ),
    "paper-determinantal": Preset(
        name="paper-determinantal",
        p=2,
        variables=("x", "y", "z", "u", "v", "w"),
        generators=tuple(minors_2x2(("x", "y", "z"), ("u", "v", "w"))),
        e_max=1,
        description="I = 2x2 minors of the generic 2x3 matrix",
    ),
}


def get_preset(name: str, line: int = 1, column: int = 1) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        raise ProblemSyntaxError(
            f"unknown preset {name!r} (choose from {', '.join(sorted(PRESETS))})", line, column
        ) from None
