"""
frobmaps CLI — Pydantic schemas for problems and reports
Field order is the JSON key order; reports must serialize byte-stably.
"""

from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from algebra.field import check_characteristic
from algebra.polynomial import Polynomial
from algebra.ring import VARIABLE_NAME, RingContext, make_ring
from cli.parser import parse_polynomial
from groebner.ideal import Ideal

# =============================================================================
# PROBLEMS
# =============================================================================


class ProblemFile(BaseModel):
    """A parsed problem; polynomials are kept in canonical rendering."""

    model_config = ConfigDict(frozen=True)

    p: int
    variables: List[str] = Field(min_length=1)
    generators: List[str] = Field(min_length=1)
    e_max: Optional[int] = Field(None, ge=1)
    preset: Optional[str] = None
    order: str = "degrevlex"
    other: List[str] = Field(default_factory=list)
    element: Optional[str] = None
    e: int = Field(1, ge=0)

    @field_validator("p")
    @classmethod
    def prime_characteristic(cls, v):
        return check_characteristic(v)

    @field_validator("variables")
    @classmethod
    def variable_names(cls, v):
        for name in v:
            if not VARIABLE_NAME.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(v)) != len(v):
            raise ValueError("duplicate variable names")
        return v

    def ring(self) -> RingContext:
        return make_ring(self.p, self.variables, self.order)

    def _polynomials(self, texts: List[str], context: RingContext) -> List[Polynomial]:
        return [parse_polynomial(text, context) for text in texts]

    def ideal(self, context: Optional[RingContext] = None) -> Ideal:
        context = context or self.ring()
        return Ideal(context, self._polynomials(self.generators, context))

    def other_ideal(self, context: Optional[RingContext] = None) -> Ideal:
        context = context or self.ring()
        return Ideal(context, self._polynomials(self.other, context))

    def element_polynomial(self, context: Optional[RingContext] = None) -> Optional[Polynomial]:
        if self.element is None:
            return None
        return self._polynomials([self.element], context or self.ring())[0]

    def with_e_max(self, e_max: Optional[int]) -> "ProblemFile":
        """The --e-max flag wins over file and preset values."""
        if e_max is None:
            return self
        return self.model_copy(update={"e_max": e_max})


class ProblemEcho(BaseModel):
    preset: Optional[str]
    p: int
    vars: List[str]
    gens: List[str]
    order: str
    e_max: Optional[int]

    @classmethod
    def from_problem(cls, problem: ProblemFile) -> "ProblemEcho":
        return cls(
            preset=problem.preset,
            p=problem.p,
            vars=list(problem.variables),
            gens=list(problem.generators),
            order=problem.order,
            e_max=problem.e_max,
        )


# =============================================================================
# REPORTS
# =============================================================================


class LevelTimings(BaseModel):
    """Wall-clock milliseconds; not covered by the byte-stability guarantee."""

    k_ms: float
    l_ms: float
    verdict_ms: float
    total_ms: float


class LevelReport(BaseModel):
    e: int = Field(ge=1)
    q: int = Field(ge=2)
    path: str
    K_generator_count: Optional[int] = None
    K: List[str] = Field(default_factory=list)
    L_generator_count: Optional[int] = None
    contained_raw: Optional[bool] = None
    contained_mod_bracket: Optional[bool] = None
    witnesses: List[str] = Field(default_factory=list)
    closed_form_match: Optional[bool] = None
    paths_agree: Optional[bool] = None
    error: Optional[str] = None
    timings: Optional[LevelTimings] = None

    @model_validator(mode="after")
    def verdicts_consistent(self):
        if self.contained_raw and self.contained_mod_bracket is False:
            raise ValueError("contained_raw implies contained_mod_bracket")
        if self.witnesses and self.contained_mod_bracket:
            raise ValueError("witnesses are only reported when contained_mod_bracket is false")
        return self


class Report(BaseModel):
    problem: ProblemEcho
    levels: List[LevelReport]
    version: str


class OperationReport(BaseModel):
    operation: str
    problem: ProblemEcho
    path: str
    result: Optional[List[str]] = None
    member: Optional[bool] = None
    version: str
