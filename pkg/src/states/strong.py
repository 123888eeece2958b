"""Strong sets of states, decided pair by pair with exact LPs."""

from __future__ import annotations

import logging
from fractions import Fraction

from src.lattice.core import Lattice
from src.models.enums import Sense
from src.models.states import Certificate, PairWitness, StateReport, StrongSetReport
from src.states.polytope import StatePolytope, state_polytope
from src.states.simplex import LPProblem, LPResult, simplex_solve

logger = logging.getLogger(__name__)


def admits_state(lattice: Lattice) -> StateReport:
    """Whether any state exists, with one as witness."""
    polytope = state_polytope(lattice)
    result = simplex_solve(polytope.problem)
    if not result.optimal:
        return StateReport(exists=False, lps_solved=1)
    return StateReport(exists=True, witness=polytope.witness(result.point), lps_solved=1)


def pair_problem(polytope: StatePolytope, a: int, b: int) -> LPProblem:
    """minimize m(b) subject to the state constraints and m(a) = 1."""
    problem = polytope.problem.with_objective(polytope.form(b))
    problem.add(polytope.form(a), Sense.EQ, 1, label=f"m({polytope.lattice.label(a)}) = 1")
    return problem


def reduced_costs(
    problem: LPProblem, multipliers: tuple[Fraction, ...] | list[Fraction], with_objective: bool
) -> list[Fraction]:
    """c_j - Σ_i y_i A_ij per variable (c taken as 0 for Farkas combinations)."""
    costs = [Fraction(0)] * len(problem.variables)
    if with_objective:
        for j, c in problem.objective.items():
            costs[j] = c
    for y, row in zip(multipliers, problem.rows, strict=True):
        if y:
            for j, c in row.coeffs.items():
                costs[j] -= y * c
    return costs


def certify(problem: LPProblem, result: LPResult, a: int, b: int) -> Certificate:
    multipliers = result.duals if result.optimal else result.farkas
    return Certificate(
        a=a,
        b=b,
        feasible=result.optimal,
        minimum=result.value,
        rows=[row.label for row in problem.rows],
        multipliers=list(multipliers),
        reduced_costs=reduced_costs(problem, multipliers, result.optimal),
    )


def pair_certificate(
    polytope: StatePolytope, a: int, b: int
) -> tuple[LPResult, Certificate | None]:
    """Solve the pair LP; the certificate is None when some state has m(a)=1 and m(b)<1."""
    problem = pair_problem(polytope, a, b)
    result = simplex_solve(problem)
    if result.optimal and result.value is not None and result.value < 1:
        return result, None
    return result, certify(problem, result, a, b)


def strong_quantum(lattice: Lattice) -> StrongSetReport:
    """For every a ≰ b, look for a state with m(a)=1 and m(b)<1.

    Pairs are visited in (a, b) order; a witness found for one pair is tried
    on later pairs before another LP is solved. Stops at the first failing
    pair and returns its certificate.
    """
    polytope = state_polytope(lattice)
    witnesses = []
    valuations: list[list[Fraction]] = []
    pairs: list[PairWitness] = []
    solved = 0
    n = lattice.size
    for a in range(1, n):
        for b in range(n):
            if lattice.leq(a, b):
                continue
            state = next(
                (k for k, m in enumerate(valuations) if m[a] == 1 and m[b] < 1),
                None,
            )
            if state is None:
                result, certificate = pair_certificate(polytope, a, b)
                solved += 1
                if certificate is not None:
                    logger.info(
                        "%s: no strong set of states, pair (%s, %s) fails after %d LPs",
                        lattice.name or "lattice",
                        lattice.label(a),
                        lattice.label(b),
                        solved,
                    )
                    return StrongSetReport(
                        admits=False,
                        failing_pair=(a, b),
                        failing_labels=(lattice.label(a), lattice.label(b)),
                        certificate=certificate,
                        witnesses=witnesses,
                        pairs=pairs,
                        lps_solved=solved,
                    )
                witness = polytope.witness(result.point)
                witnesses.append(witness)
                valuations.append(list(witness.elements))
                state = len(witnesses) - 1
            pairs.append(
                PairWitness(
                    a=a, b=b, a_label=lattice.label(a), b_label=lattice.label(b), state=state
                )
            )
    logger.info(
        "%s admits a strong set of states: %d pairs, %d witnesses, %d LPs",
        lattice.name or "lattice",
        len(pairs),
        len(witnesses),
        solved,
    )
    return StrongSetReport(admits=True, witnesses=witnesses, pairs=pairs, lps_solved=solved)


def strong_classical(lattice: Lattice) -> StateReport:
    """One state m with m(a)=1 and m(b)<1 for every pair a ≰ b.

    The equalities go into the LP directly. Each strict inequality gets its
    own LP minimizing m(b); all of them succeed iff the average of the
    minimizers satisfies every strict inequality at once.
    """
    polytope = state_polytope(lattice)
    n = lattice.size
    ones: set[int] = set()
    strict: set[int] = set()
    for a in range(n):
        for b in range(n):
            if not lattice.leq(a, b):
                ones.add(a)
                strict.add(b)
    base = polytope.problem.copy()
    for a in sorted(ones):
        base.add(polytope.form(a), Sense.EQ, 1, label=f"m({lattice.label(a)}) = 1")

    points: list[tuple[Fraction, ...]] = []
    solved = 0
    for b in sorted(strict):
        result = simplex_solve(base.with_objective(polytope.form(b)))
        solved += 1
        if not result.optimal or result.value is None or result.value >= 1:
            logger.info(
                "%s: no strong classical state (m(%s) < 1 unreachable)",
                lattice.name or "lattice",
                lattice.label(b),
            )
            return StateReport(exists=False, lps_solved=solved)
        points.append(result.point)
    if not points:
        result = simplex_solve(base)
        solved += 1
        if not result.optimal:
            return StateReport(exists=False, lps_solved=solved)
        points.append(result.point)
    width = len(points[0])
    average = [sum((p[j] for p in points), Fraction(0)) / len(points) for j in range(width)]
    return StateReport(exists=True, witness=polytope.witness(average), lps_solved=solved)
