"""Wagon-wheel OMLs Gn: a rim of 2n blocks with n spokes through a hub."""

import logging
from dataclasses import dataclass

from src.checker.engine import check
from src.config import get_settings
from src.errors import BadParameterError, GeneratorInvalidError, LatticeError
from src.families.generators import ngo_inference
from src.greechie import ATOM_ALPHABET
from src.lattice import Lattice, build
from src.models.diagram import GreechieDiagram
from src.models.verdict import Strategy

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WagonWheel:
    n: int
    diagram: GreechieDiagram
    lattice: Lattice
    validation: tuple[str, ...]


def wagon_diagram(n: int) -> GreechieDiagram:
    """Rim block i is {k_i, m_i, k_(i+1)}; spoke j is {m_2j, p_j, hub}."""
    if n < 3:
        raise BadParameterError(f"wagon wheel needs n >= 3, got {n}")
    rim = 2 * n
    count = 2 * rim + n + 1
    if count <= len(ATOM_ALPHABET):
        names = iter(ATOM_ALPHABET)
        corner = [next(names) for _ in range(rim)]
        middle = [next(names) for _ in range(rim)]
        spoke = [next(names) for _ in range(n)]
        hub = next(names)
    else:
        corner = [f"k{i}" for i in range(rim)]
        middle = [f"m{i}" for i in range(rim)]
        spoke = [f"p{j}" for j in range(n)]
        hub = "h"
    blocks = [(corner[i], middle[i], corner[(i + 1) % rim]) for i in range(rim)]
    blocks += [(middle[2 * j], spoke[j], hub) for j in range(n)]
    return GreechieDiagram.from_blocks(blocks)


def wagon_wheel(n: int) -> WagonWheel:
    """Build Gn and check that it is an OML where n-Go fails and (n-1)-Go holds.

    The (n-1)-Go check is exhaustive and only run up to the
    ``wagon_wheel_validate_max`` setting; beyond that it is skipped with a warning.
    """
    diagram = wagon_diagram(n)
    name = f"G{n}"
    try:
        lattice = build(diagram, name=name)
    except LatticeError as exc:
        raise GeneratorInvalidError(f"{name} is not an orthomodular lattice: {exc}") from exc
    notes = [f"{name}: OML with {lattice.size} elements"]

    failing = check(lattice, ngo_inference(n), Strategy())
    if failing.holds:
        raise GeneratorInvalidError(f"{n}-Go holds in {name}")
    notes.append(f"{n}-Go fails")

    if n >= 4:
        limit = get_settings().wagon_wheel_validate_max
        if n <= limit:
            lower = check(lattice, ngo_inference(n - 1), Strategy())
            if not lower.holds:
                raise GeneratorInvalidError(f"{n - 1}-Go fails in {name}")
            notes.append(f"{n - 1}-Go holds")
        else:
            logger.warning(
                "Skipping the %d-Go check for %s (wagon_wheel_validate_max=%d)", n - 1, name, limit
            )
            notes.append(f"{n - 1}-Go not checked (n > {limit})")
    logger.info("Generated %s with %d atoms, %d elements", name, len(diagram.atoms), lattice.size)
    return WagonWheel(n=n, diagram=diagram, lattice=lattice, validation=tuple(notes))
