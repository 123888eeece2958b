"""Exact two-phase simplex over the rationals.

Problems have nonnegative variables and rows of the form ``a·x (<=|>=|=) b``.
Pivoting follows Bland's rule, so the method terminates on degenerate
problems. Results carry dual multipliers for optimal problems and a Farkas
combination for infeasible ones, both indexed by the problem's rows.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from src.models.enums import LPStatus, Sense
from src.models.states import format_fraction

logger = logging.getLogger(__name__)

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True, slots=True)
class Row:
    coeffs: Mapping[int, Fraction]
    sense: Sense
    rhs: Fraction
    label: str = ""


@dataclass
class LPProblem:
    """A linear program over nonnegative variables."""

    variables: list[str]
    rows: list[Row] = field(default_factory=list)
    objective: dict[int, Fraction] = field(default_factory=dict)
    maximize: bool = False

    def add(
        self,
        coeffs: Mapping[int, Fraction | int],
        sense: Sense,
        rhs: Fraction | int,
        label: str = "",
    ) -> int:
        clean = {j: Fraction(c) for j, c in coeffs.items() if c}
        self.rows.append(Row(clean, sense, Fraction(rhs), label or f"r{len(self.rows)}"))
        return len(self.rows) - 1

    def copy(self) -> LPProblem:
        return LPProblem(list(self.variables), list(self.rows), dict(self.objective), self.maximize)

    def with_objective(
        self, coeffs: Mapping[int, Fraction | int], maximize: bool = False
    ) -> LPProblem:
        problem = self.copy()
        problem.objective = {j: Fraction(c) for j, c in coeffs.items() if c}
        problem.maximize = maximize
        return problem

    def satisfied_by(self, point: Sequence[Fraction]) -> bool:
        if any(v < 0 for v in point):
            return False
        for row in self.rows:
            lhs = sum((c * point[j] for j, c in row.coeffs.items()), _ZERO)
            if row.sense == Sense.LE and lhs > row.rhs:
                return False
            if row.sense == Sense.GE and lhs < row.rhs:
                return False
            if row.sense == Sense.EQ and lhs != row.rhs:
                return False
        return True

    def _linear(self, coeffs: Mapping[int, Fraction]) -> str:
        if not coeffs:
            return "0"
        parts = []
        for j in sorted(coeffs):
            c = coeffs[j]
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {format_fraction(abs(c))} {self.variables[j]}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text

    def dump(self) -> str:
        """Plain inequality text, one row per line, for external cross-checking."""
        lines = [f"variables {' '.join(self.variables)}"]
        goal = "maximize" if self.maximize else "minimize"
        lines.append(f"{goal} {self._linear(self.objective)}")
        for row in self.rows:
            rhs = format_fraction(row.rhs)
            lines.append(f"{row.label}: {self._linear(row.coeffs)} {row.sense} {rhs}")
        lines.append("bounds all >= 0")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True, slots=True)
class LPResult:
    status: LPStatus
    value: Fraction | None = None
    point: tuple[Fraction, ...] = ()
    duals: tuple[Fraction, ...] = ()
    farkas: tuple[Fraction, ...] = ()
    pivots: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == LPStatus.OPTIMAL


class _Tableau:
    """Dense tableau: one artificial column per row, kept for reading B⁻¹."""

    def __init__(self, problem: LPProblem) -> None:
        m = len(problem.rows)
        n = len(problem.variables)
        slack_rows = [i for i, r in enumerate(problem.rows) if r.sense != Sense.EQ]
        self.n = n
        self.m = m
        self.slack_col = {i: n + k for k, i in enumerate(slack_rows)}
        self.art0 = n + len(slack_rows)
        self.width = self.art0 + m
        self.flipped: list[bool] = []
        self.rows: list[list[Fraction]] = []
        for i, row in enumerate(problem.rows):
            line = [_ZERO] * (self.width + 1)
            for j, c in row.coeffs.items():
                line[j] = c
            if row.sense == Sense.LE:
                line[self.slack_col[i]] = _ONE
            elif row.sense == Sense.GE:
                line[self.slack_col[i]] = -_ONE
            line[-1] = row.rhs
            flip = row.rhs < 0
            if flip:
                line = [-v for v in line]
            line[self.art0 + i] = _ONE
            self.flipped.append(flip)
            self.rows.append(line)
        self.basis = [self.art0 + i for i in range(m)]
        self.obj: list[Fraction] = [_ZERO] * (self.width + 1)
        self.costs: list[Fraction] = [_ZERO] * self.width
        self.pivots = 0

    def set_costs(self, costs: list[Fraction]) -> None:
        """Install ``costs`` and price out the current basis."""
        self.costs = costs
        self.obj = [*costs, _ZERO]
        for i, b in enumerate(self.basis):
            cb = costs[b]
            if cb:
                line = self.rows[i]
                self.obj = [o - cb * v for o, v in zip(self.obj, line, strict=True)]

    def pivot(self, r: int, col: int) -> None:
        line = self.rows[r]
        p = line[col]
        if p != 1:
            line = [v / p for v in line]
            self.rows[r] = line
        for i, other in enumerate(self.rows):
            if i != r and other[col]:
                f = other[col]
                self.rows[i] = [a - f * b for a, b in zip(other, line, strict=True)]
        if self.obj[col]:
            f = self.obj[col]
            self.obj = [a - f * b for a, b in zip(self.obj, line, strict=True)]
        self.basis[r] = col
        self.pivots += 1

    def run(self, allowed: int) -> bool:
        """Bland's rule over columns ``< allowed``. False when unbounded."""
        while True:
            col = next((j for j in range(allowed) if self.obj[j] < 0), None)
            if col is None:
                return True
            best: tuple[Fraction, int, int] | None = None
            for i, line in enumerate(self.rows):
                if line[col] > 0:
                    key = (line[-1] / line[col], self.basis[i], i)
                    if best is None or key[:2] < best[:2]:
                        best = key
            if best is None:
                return False
            self.pivot(best[2], col)

    def duals(self) -> list[Fraction]:
        """y = c_B B⁻¹, read from the artificial columns' reduced costs."""
        return [self.costs[self.art0 + i] - self.obj[self.art0 + i] for i in range(self.m)]

    def point(self) -> tuple[Fraction, ...]:
        values = [_ZERO] * self.n
        for i, b in enumerate(self.basis):
            if b < self.n:
                values[b] = self.rows[i][-1]
        return tuple(values)

    def unflip(self, values: list[Fraction]) -> tuple[Fraction, ...]:
        return tuple(-y if f else y for y, f in zip(values, self.flipped, strict=True))


def simplex_solve(problem: LPProblem) -> LPResult:
    """Solve ``problem`` exactly.

    Duals satisfy ``value == Σ duals[i] * rows[i].rhs``. A Farkas combination
    ``y`` satisfies ``yᵀA <= 0`` column-wise (respecting row senses) and
    ``yᵀb > 0``.
    """
    tab = _Tableau(problem)
    art0 = tab.art0

    phase1 = [_ZERO] * art0 + [_ONE] * tab.m
    tab.set_costs(phase1)
    tab.run(tab.width)
    infeasibility = -tab.obj[-1]
    if infeasibility > 0:
        farkas = tab.unflip(tab.duals())
        logger.debug("Infeasible after %d pivots", tab.pivots)
        return LPResult(LPStatus.INFEASIBLE, farkas=farkas, pivots=tab.pivots)

    # Drive zero-level artificials out where a structural column can replace them.
    for i, b in enumerate(tab.basis):
        if b >= art0:
            col = next((j for j in range(art0) if tab.rows[i][j] != 0), None)
            if col is not None:
                tab.pivot(i, col)

    sign = -_ONE if problem.maximize else _ONE
    costs = [_ZERO] * tab.width
    for j, c in problem.objective.items():
        costs[j] = sign * c
    tab.set_costs(costs)
    if not tab.run(art0):
        logger.debug("Unbounded after %d pivots", tab.pivots)
        return LPResult(LPStatus.UNBOUNDED, pivots=tab.pivots)

    value = sign * -tab.obj[-1]
    duals = tab.unflip([sign * y for y in tab.duals()])
    logger.debug("Optimal value %s after %d pivots", value, tab.pivots)
    return LPResult(
        LPStatus.OPTIMAL, value=value, point=tab.point(), duals=duals, pivots=tab.pivots
    )
