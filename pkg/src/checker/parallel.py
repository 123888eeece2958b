"""Exhaustive checking split by the value of the first variable.

Partitions run in worker processes that share a cancel index: once some
partition finds a counterexample, partitions with a higher first value stop.
Results are merged in partition order, so the reported counterexample is the
one the sequential walk would have found.
"""

from __future__ import annotations

import logging
import multiprocessing
from concurrent.futures import Future, ProcessPoolExecutor
from typing import Any

from src.checker.plan import CheckPlan, StopWalk, Walker, WalkStats, build_plan
from src.lattice.core import Lattice, bits
from src.models.enums import VariableOrder
from src.models.verdict import Strategy
from src.terms.ast import Inference

logger = logging.getLogger(__name__)

_POLL_EVERY = 4096

_plan: CheckPlan | None = None
_cancel: Any = None


def _init_worker(
    lattice: Lattice, inference: Inference, how: VariableOrder, cancel: Any
) -> None:
    global _plan, _cancel  # noqa: PLW0603
    _plan = build_plan(lattice, inference, how)
    _cancel = cancel


def _run_partition(first: int) -> tuple[int, dict[str, int] | None, int, int, bool]:
    """Walk the subtree with ``first`` at depth 0.

    Returns (first, counterexample, examined, pruned, aborted).
    """
    plan = _plan
    assert plan is not None
    if _cancel.value < first:
        return first, None, 0, 0, True

    def poll(stats: WalkStats) -> None:
        if stats.steps % _POLL_EVERY == 0 and _cancel.value < first:
            raise StopWalk

    walker = Walker(plan, on_step=poll)
    found: list[dict[str, int]] = []

    def leaf(values: list[int]) -> bool:
        if not walker.conclusion_holds():
            found.append(plan.assignment(values))
            return True
        return False

    try:
        walker.run(leaf, first=first)
    except StopWalk:
        return first, None, walker.stats.examined, walker.stats.pruned, True
    if found and _cancel.value > first:
        _cancel.value = first
    counterexample = found[0] if found else None
    return first, counterexample, walker.stats.examined, walker.stats.pruned, False


def run_partitioned(
    lattice: Lattice, inference: Inference, strategy: Strategy
) -> tuple[dict[str, int] | None, WalkStats]:
    plan = build_plan(lattice, inference, strategy.variable_order)
    firsts = list(bits(Walker(plan, prune=False).candidates(0)))
    totals = WalkStats()
    with multiprocessing.Manager() as manager:
        cancel = manager.Value("i", lattice.size)
        with ProcessPoolExecutor(
            max_workers=strategy.workers,
            initializer=_init_worker,
            initargs=(lattice, inference, strategy.variable_order, cancel),
        ) as pool:
            futures: list[Future] = [pool.submit(_run_partition, v) for v in firsts]
            winner: dict[str, int] | None = None
            for future in futures:
                if winner is not None:
                    future.cancel()
                    continue
                first, counterexample, examined, pruned, aborted = future.result()
                totals.examined += examined
                totals.pruned += pruned
                logger.debug(
                    "Partition %d: examined=%d pruned=%d aborted=%s",
                    first,
                    examined,
                    pruned,
                    aborted,
                )
                if counterexample is not None:
                    winner = counterexample
                    if cancel.value > first:
                        cancel.value = first
    return winner, totals
