"""Deciding inferences over finite lattices."""

import logging
import random
import time

from src.checker.parallel import run_partitioned
from src.checker.plan import StopWalk, Walker, WalkStats, build_plan, random_choices
from src.errors import CounterexampleVerificationError
from src.lattice.core import Lattice
from src.models.enums import SearchMode, VerdictStatus
from src.models.verdict import Strategy, Verdict
from src.terms.ast import Commutes, Inference, Leq, Orthogonal
from src.terms.evaluate import evaluate

logger = logging.getLogger(__name__)

_RESTART_STEPS = 20_000


def falsifies(lattice: Lattice, inference: Inference, assignment: dict[str, int]) -> bool:
    """Direct evaluation: all hypotheses hold and the conclusion fails."""
    for hyp in inference.hypotheses:
        left = evaluate(hyp.left, lattice, assignment)
        right = evaluate(hyp.right, lattice, assignment)
        if isinstance(hyp, Orthogonal):
            if not lattice.orthogonal(left, right):
                return False
        elif left != right:
            return False
    concl = inference.conclusion
    left = evaluate(concl.left, lattice, assignment)
    right = evaluate(concl.right, lattice, assignment)
    if isinstance(concl, Leq):
        return not lattice.leq(left, right)
    if isinstance(concl, Commutes):
        both = lattice.meet(lattice.join(left, right), lattice.join(left, lattice.ortho(right)))
        return left != both
    return left != right


_Outcome = tuple[dict[str, int] | None, WalkStats, bool]


def _exhaustive(lattice: Lattice, inference: Inference, strategy: Strategy) -> _Outcome:
    plan = build_plan(lattice, inference, strategy.variable_order)
    walker = Walker(plan)
    found: list[dict[str, int]] = []

    def leaf(values: list[int]) -> bool:
        if not walker.conclusion_holds():
            found.append(plan.assignment(values))
            return True
        return False

    walker.run(leaf)
    return (found[0] if found else None), walker.stats, True


def _search(lattice: Lattice, inference: Inference, strategy: Strategy) -> _Outcome:
    """Randomized restarts under a step budget; never reports a definitive pass."""
    plan = build_plan(lattice, inference, strategy.variable_order)
    rng = random.Random(strategy.seed)
    total = WalkStats()
    found: list[dict[str, int]] = []
    restarts = 0
    while total.steps < strategy.budget:
        restarts += 1
        cap = min(_RESTART_STEPS, strategy.budget - total.steps)

        def stop_at_cap(stats: WalkStats, cap: int = cap) -> None:
            if stats.steps >= cap:
                raise StopWalk

        walker = Walker(plan, choices=random_choices(plan, rng), on_step=stop_at_cap)

        def leaf(values: list[int], walker: Walker = walker) -> bool:
            if not walker.conclusion_holds():
                found.append(plan.assignment(values))
                return True
            return False

        exhausted = False
        try:
            walker.run(leaf)
            exhausted = not found
        except StopWalk:
            pass
        total.steps += walker.stats.steps
        total.examined += walker.stats.examined
        total.pruned += walker.stats.pruned
        if found or exhausted:
            break
    logger.debug("Search finished after %d restarts, %d steps", restarts, total.steps)
    return (found[0] if found else None), total, False


def check(lattice: Lattice, inference: Inference, strategy: Strategy | None = None) -> Verdict:
    """Decide ``inference`` in ``lattice``.

    Exhaustive mode is definitive. Search mode returns FALSIFIED or
    INCONCLUSIVE. Counterexamples are re-verified by direct evaluation.
    """
    strategy = strategy or Strategy()
    started = time.perf_counter()
    name = inference.name or "inference"
    logger.info("Checking %s in %s (%s)", name, lattice.name or "lattice", strategy.key)

    if strategy.mode == SearchMode.SEARCH:
        counterexample, stats, definitive = _search(lattice, inference, strategy)
    elif strategy.workers > 1 and len(inference.variables) > 1:
        counterexample, stats = run_partitioned(lattice, inference, strategy)
        definitive = True
    else:
        counterexample, stats, definitive = _exhaustive(lattice, inference, strategy)

    if counterexample is not None:
        if not falsifies(lattice, inference, counterexample):
            raise CounterexampleVerificationError(
                f"assignment {counterexample} does not falsify {name} in {lattice.name}"
            )
        status = VerdictStatus.FALSIFIED
    elif definitive:
        status = VerdictStatus.HOLDS
    else:
        status = VerdictStatus.INCONCLUSIVE

    labels = None
    if counterexample is not None:
        labels = {v: lattice.label(x) for v, x in counterexample.items()}
    verdict = Verdict(
        status=status,
        counterexample=counterexample,
        counterexample_labels=labels,
        assignments_examined=stats.examined,
        pruned_subtrees=stats.pruned,
        elapsed=time.perf_counter() - started,
    )
    logger.info(
        "%s in %s: %s after %d assignments (%.3fs)",
        name,
        lattice.name or "lattice",
        status,
        stats.examined,
        verdict.elapsed,
    )
    return verdict
