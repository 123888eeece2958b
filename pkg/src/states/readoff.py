"""Reading a condensed state equation off a failing strong-set pair.

The certificate's multipliers say which block constraints the argument
"m(a)=1 implies m(b)=1" uses and how often. Rows with positive weight
(block sums and m(a)=1) become left-hand terms, rows with negative weight
become right-hand terms, and the objective m(b) adds one more right-hand
term. Atoms pinned to a single value on the face m(a)=1, or with a nonzero
reduced cost, are dropped. Integer scaling of the weights repeats terms,
which is what keeps the result balanced.
"""

from __future__ import annotations

import logging
import math
import random
import string
from collections import Counter
from fractions import Fraction

from src.checker.engine import check, falsifies
from src.config import get_settings
from src.errors import NotGreechieBackedError, ReadoffFailedError
from src.lattice.core import Lattice
from src.models.condensed import CondensedStateEquation
from src.models.enums import SearchMode, Sense
from src.models.states import Certificate, ReadoffResult
from src.models.verdict import Strategy
from src.states.polytope import StatePolytope, state_polytope
from src.states.simplex import LPProblem, simplex_solve
from src.states.strong import pair_certificate, pair_problem, reduced_costs, strong_quantum
from src.terms.condensed import mge_to_inference, serialize_condensed
from src.terms.printer import format_inference

logger = logging.getLogger(__name__)

_PREFERRED = "abcdefghjklmnpqrstuvwxyz"

Term = tuple[int, ...]


def _letters(count: int) -> str:
    if count <= len(_PREFERRED):
        return _PREFERRED
    return string.ascii_lowercase


def alternative_certificate(
    problem: LPProblem, certificate: Certificate, rng: random.Random
) -> Certificate | None:
    """Another multiplier vector of the same kind, minimizing a random weighted L1 norm."""
    rows = problem.rows
    dual = LPProblem([f"{kind}{i}" for i in range(len(rows)) for kind in ("p", "q")])
    costs = [Fraction(0)] * len(problem.variables)
    if certificate.feasible:
        for j, c in problem.objective.items():
            costs[j] = c
    for j in range(len(problem.variables)):
        coeffs: dict[int, Fraction] = {}
        for i, row in enumerate(rows):
            c = row.coeffs.get(j)
            if c:
                coeffs[2 * i] = c
                coeffs[2 * i + 1] = -c
        dual.add(coeffs, Sense.LE, costs[j], label=f"column {problem.variables[j]}")
    target = certificate.minimum if certificate.feasible else Fraction(1)
    value = {}
    for i, row in enumerate(rows):
        if row.rhs:
            value[2 * i] = row.rhs
            value[2 * i + 1] = -row.rhs
    dual.add(value, Sense.EQ, target, label="value")
    weights = {j: Fraction(rng.randint(1, 4)) for j in range(2 * len(rows))}
    result = simplex_solve(dual.with_objective(weights))
    if not result.optimal:
        return None
    multipliers = [result.point[2 * i] - result.point[2 * i + 1] for i in range(len(rows))]
    return Certificate(
        a=certificate.a,
        b=certificate.b,
        feasible=certificate.feasible,
        minimum=certificate.minimum,
        rows=certificate.rows,
        multipliers=multipliers,
        reduced_costs=reduced_costs(problem, multipliers, certificate.feasible),
    )


class _Face:
    """Min/max of single atoms over the face m(a)=1, computed on demand."""

    def __init__(self, problem: LPProblem) -> None:
        self.problem = problem.with_objective({})
        self._pinned: dict[int, bool] = {}

    def pinned(self, j: int) -> bool:
        if j not in self._pinned:
            low = simplex_solve(self.problem.with_objective({j: 1}))
            high = simplex_solve(self.problem.with_objective({j: 1}, maximize=True))
            self._pinned[j] = bool(low.optimal and high.optimal and low.value == high.value)
        return self._pinned[j]


def condense(
    problem: LPProblem, certificate: Certificate, face: _Face
) -> tuple[list[Term], list[Term]] | None:
    """Left and right terms (tuples of LP variable indices), or None when unusable."""
    weights = [Fraction(y) for y in certificate.multipliers]
    scale = math.lcm(*(w.denominator for w in weights if w)) if any(weights) else 1
    used = {j for w, row in zip(weights, problem.rows, strict=True) if w for j in row.coeffs}
    if certificate.feasible:
        used |= set(problem.objective)
    kept = {j for j in used if certificate.reduced_costs[j] == 0}
    kept = {j for j in kept if not face.pinned(j)}

    lhs: list[Term] = []
    rhs: list[Term] = []
    for w, row in zip(weights, problem.rows, strict=True):
        count = int(w * scale)
        term = tuple(sorted(j for j in row.coeffs if j in kept))
        if not term or not count:
            continue
        (lhs if count > 0 else rhs).extend([term] * abs(count))
    if certificate.feasible:
        term = tuple(sorted(j for j in problem.objective if j in kept))
        if term:
            rhs.extend([term] * scale)

    def balanced(left: list[Term], right: list[Term]) -> bool:
        return Counter(j for t in left for j in t) == Counter(j for t in right for j in t)

    if not balanced(lhs, rhs):
        return None
    short_l = [t for t in lhs if len(t) > 1]
    short_r = [t for t in rhs if len(t) > 1]
    if short_l and short_r and balanced(short_l, short_r):
        lhs, rhs = short_l, short_r
    if not lhs or not rhs:
        return None
    return lhs, rhs


def _equation(
    lhs: list[Term], rhs: list[Term]
) -> tuple[CondensedStateEquation, dict[str, int]] | None:
    order: dict[int, None] = {}
    for term in (*lhs, *rhs):
        for j in term:
            order.setdefault(j)
    letters = _letters(len(order))
    if len(order) > len(letters):
        logger.warning(
            "Read-off needs %d variables, more than %d letters", len(order), len(letters)
        )
        return None
    letter = {j: letters[k] for k, j in enumerate(order)}
    equation = CondensedStateEquation(
        lhs=tuple(tuple(letter[j] for j in t) for t in lhs),
        rhs=tuple(tuple(letter[j] for j in t) for t in rhs),
    )
    return equation, {letter[j]: j for j in order}


def mge_readoff(
    lattice: Lattice,
    pair: tuple[int, int] | None = None,
    certificate: Certificate | None = None,
    *,
    attempts: int | None = None,
) -> ReadoffResult:
    """Turn a failing pair into a balanced condensed equation that fails in ``lattice``.

    Without ``pair`` the first failing pair of :func:`strong_quantum` is used;
    without ``certificate`` the pair LP is solved here. Up to ``attempts``
    certificates are tried (the given one, then alternatives).

    Raises:
        NotGreechieBackedError: the lattice has no block structure.
        ReadoffFailedError: the pair does not fail, or no candidate fails in ``lattice``.
    """
    settings = get_settings()
    attempts = attempts or settings.readoff_attempts
    polytope: StatePolytope = state_polytope(lattice, "blocks")
    structure = lattice.structure
    if structure is None:
        raise NotGreechieBackedError(f"{lattice.name or 'lattice'} has no atom/block structure")
    if pair is None:
        report = strong_quantum(lattice)
        if report.admits or report.failing_pair is None:
            raise ReadoffFailedError(f"{lattice.name or 'lattice'} admits a strong set of states")
        pair, certificate = report.failing_pair, report.certificate
    a, b = pair
    if certificate is None:
        _, certificate = pair_certificate(polytope, a, b)
        if certificate is None:
            raise ReadoffFailedError(
                f"pair ({lattice.label(a)}, {lattice.label(b)}) has a separating state"
            )

    problem = pair_problem(polytope, a, b)
    face = _Face(problem)
    rng = random.Random(settings.search_seed)
    names = list(structure.atom_names)
    seen: set[str] = set()
    candidate: Certificate | None = certificate
    for attempt in range(1, attempts + 1):
        if attempt > 1:
            candidate = alternative_certificate(problem, certificate, rng)
        if candidate is None:
            continue
        terms = condense(problem, candidate, face)
        built = _equation(*terms) if terms else None
        if built is None:
            continue
        equation, columns = built
        text = serialize_condensed(equation)
        if text in seen:
            continue
        seen.add(text)
        inference = mge_to_inference(equation)
        natural = {v: structure.atoms[j] for v, j in columns.items()}
        counterexample = None
        if falsifies(lattice, inference, natural):
            counterexample = natural
        else:
            strategy = Strategy(
                mode=SearchMode.SEARCH, budget=settings.search_budget, seed=settings.search_seed
            )
            verdict = check(lattice, inference, strategy)
            counterexample = verdict.counterexample
        if counterexample is None:
            logger.warning("Read-off attempt %d gave %s, which holds; retrying", attempt, text)
            continue
        logger.info("Read off %s from pair (%s, %s)", text, lattice.label(a), lattice.label(b))
        return ReadoffResult(
            condensed=equation,
            equation=text,
            inference=format_inference(inference),
            variables={v: names[j] for v, j in columns.items()},
            verified_fails_in_source=True,
            counterexample=counterexample,
            attempts=attempt,
        )
    raise ReadoffFailedError(
        f"no failing balanced equation from pair ({lattice.label(a)}, {lattice.label(b)}) "
        f"after {attempts} attempts"
    )
