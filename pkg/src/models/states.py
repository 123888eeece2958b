from fractions import Fraction
from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, PlainValidator

from src.models.condensed import CondensedStateEquation


def _to_fraction(value: object) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int | str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational: {value!r}") from None
    raise ValueError(f"not a rational: {value!r}")


def format_fraction(value: Fraction) -> str:
    """Exact "p/q" text; integers keep the "/1" so every value reads the same way."""
    return f"{value.numerator}/{value.denominator}"


Rational = Annotated[
    Fraction,
    PlainValidator(_to_fraction),
    PlainSerializer(format_fraction, return_type=str),
]


class StateWitness(BaseModel):
    """A state given as exact values: per atom (when Greechie-backed) and per element."""

    model_config = ConfigDict(frozen=True)

    atoms: dict[str, Rational] = Field(default_factory=dict)
    elements: list[Rational]

    def value(self, element: int) -> Fraction:
        return self.elements[element]


class StateReport(BaseModel):
    """Answer for the single-state questions: any state at all, or one classical strong state."""

    exists: bool
    witness: StateWitness | None = None
    lps_solved: int = 0


class PairWitness(BaseModel):
    """Pair a ≰ b passed: ``state`` (index into the witness list) has m(a)=1 and m(b)<1."""

    a: int
    b: int
    a_label: str
    b_label: str
    state: int


class Certificate(BaseModel):
    """Why a pair fails.

    ``rows`` names the LP constraints and ``multipliers`` holds one exact
    multiplier per row. When ``feasible`` is true the multipliers are dual
    values proving min m(b) = 1 given m(a) = 1; otherwise they are a Farkas
    combination proving that no state has m(a) = 1.
    """

    a: int
    b: int
    feasible: bool
    minimum: Rational | None = None
    rows: list[str]
    multipliers: list[Rational]
    reduced_costs: list[Rational] = Field(default_factory=list)


class StrongSetReport(BaseModel):
    admits: bool
    failing_pair: tuple[int, int] | None = None
    failing_labels: tuple[str, str] | None = None
    certificate: Certificate | None = None
    witnesses: list[StateWitness] = Field(default_factory=list)
    pairs: list[PairWitness] = Field(default_factory=list)
    lps_solved: int = 0


class ReadoffResult(BaseModel):
    """Condensed equation read off a failing pair, with its variable-to-atom map."""

    condensed: CondensedStateEquation
    equation: str
    inference: str
    variables: dict[str, str]
    verified_fails_in_source: bool
    counterexample: dict[str, int] | None = None
    attempts: int = 1
