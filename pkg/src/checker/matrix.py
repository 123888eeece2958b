"""Lattice × family verdict tables with a resumable cache."""

import asyncio
import logging
from collections.abc import Sequence

from src.checker.engine import check
from src.families.generators import generate
from src.lattice.core import Lattice
from src.models.family import FamilyId
from src.models.verdict import MatrixRow, Strategy
from src.storage.verdicts import VerdictCache

logger = logging.getLogger(__name__)


async def check_matrix(
    lattices: Sequence[Lattice],
    families: Sequence[FamilyId | str],
    strategy: Strategy | None = None,
    cache: VerdictCache | None = None,
) -> list[MatrixRow]:
    """Check every family in every lattice, lattice-major.

    Cached verdicts are reused and fresh ones appended, so an interrupted
    run picks up where it stopped. Checks run one at a time off the event
    loop; the checker itself parallelizes through ``strategy.workers``.
    """
    strategy = strategy or Strategy()
    ids = [f if isinstance(f, FamilyId) else FamilyId.parse(f) for f in families]
    inferences = {fid.key: generate(fid) for fid in ids}
    rows: list[MatrixRow] = []
    for lattice in lattices:
        for fid in ids:
            verdict = None
            if cache is not None:
                verdict = await cache.get(lattice.digest, fid.key, strategy.key)
                if verdict is not None:
                    logger.info("Cache hit: %s in %s", fid.key, lattice.name or lattice.digest[:12])
            if verdict is None:
                verdict = await asyncio.to_thread(check, lattice, inferences[fid.key], strategy)
                if cache is not None:
                    await cache.put(lattice.digest, fid.key, strategy.key, verdict)
            rows.append(
                MatrixRow(
                    lattice=lattice.name,
                    lattice_digest=lattice.digest,
                    family=fid.key,
                    strategy=strategy.key,
                    verdict=verdict,
                )
            )
    return rows
