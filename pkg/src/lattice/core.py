"""Finite ortholattice with dense operation tables.

Elements are dense indices ``0..size-1``; index 0 is the bottom and the last
index is the top. The order is stored as down-set bitsets: bit ``z`` of
``below[x]`` is set iff ``z <= x``.
"""

from __future__ import annotations

import hashlib
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from src.errors import IndexOutOfRangeError, NotALatticeError
from src.models.diagram import GreechieDiagram

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class BlockStructure:
    """Atom/block skeleton of a lattice, used to parameterise states by atoms.

    ``blocks`` lists the atom element ids of each block; ``element_atoms[x]``
    is a set of mutually orthogonal atoms, all in one block, whose join is x.
    """

    atom_names: tuple[str, ...]
    atoms: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    element_atoms: tuple[tuple[int, ...], ...]


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def transitive_closure(below: list[int]) -> list[int]:
    """Warshall closure over down-set bitsets."""
    closed = list(below)
    for k in range(len(closed)):
        bit_k = 1 << k
        row_k = closed[k]
        for i, row in enumerate(closed):
            if row & bit_k:
                closed[i] = row | row_k
    return closed


class Lattice:
    """Immutable finite ortholattice.

    Args:
        labels: Display label per element.
        below: Down-set bitset per element (must already be transitively closed).
        ortho: Orthocomplement permutation.
        name: Human-readable name used in reports.
        structure: Optional atom/block skeleton.
        diagram: Source Greechie diagram, when built by pasting.
    """

    __slots__ = (
        "labels",
        "below",
        "above",
        "ortho_table",
        "meet_table",
        "join_table",
        "name",
        "structure",
        "diagram",
        "_digest",
        "_orth_neighbors",
        "_sasaki",
        "_equiv",
    )

    def __init__(
        self,
        labels: Sequence[str],
        below: Sequence[int],
        ortho: Sequence[int],
        *,
        name: str = "",
        structure: BlockStructure | None = None,
        diagram: GreechieDiagram | None = None,
    ) -> None:
        n = len(labels)
        if len(below) != n or len(ortho) != n:
            raise ValueError("labels, below and ortho must have equal length")
        self.labels: tuple[str, ...] = tuple(labels)
        self.below: tuple[int, ...] = tuple(below)
        self.ortho_table: tuple[int, ...] = tuple(ortho)
        self.name = name
        self.structure = structure
        self.diagram = diagram
        full = (1 << n) - 1
        if self.below[0] != 1 or self.below[n - 1] != full:
            raise NotALatticeError("element 0 must be the bottom and the last element the top")

        above = [0] * n
        for x, row in enumerate(self.below):
            for z in bits(row):
                above[z] |= 1 << x
        self.above: tuple[int, ...] = tuple(above)

        self.meet_table = self._bound_table(self.below, "meet")
        self.join_table = self._bound_table(self.above, "join")
        self._digest: str | None = None
        self._orth_neighbors: tuple[tuple[int, ...], ...] | None = None
        self._sasaki: tuple[tuple[int, ...], ...] | None = None
        self._equiv: tuple[tuple[int, ...], ...] | None = None

    def _bound_table(self, cones: Sequence[int], kind: str) -> tuple[tuple[int, ...], ...]:
        n = len(cones)
        table = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                common = cones[x] & cones[y]
                bound = -1
                for z in bits(common):
                    if cones[z] == common:
                        bound = z
                        break
                if bound < 0:
                    pair = (self.labels[x], self.labels[y])
                    raise NotALatticeError(f"no unique {kind} for {pair[0]}, {pair[1]}", pair=pair)
                table[x][y] = table[y][x] = bound
        return tuple(tuple(row) for row in table)

    # ── Lookups ──────────────────────────────────────────────────────────────

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"Lattice({self.name!r}, size={self.size})"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return len(self.labels) - 1

    def check_index(self, x: int) -> int:
        if not 0 <= x < len(self.labels):
            raise IndexOutOfRangeError(x, len(self.labels))
        return x

    def leq(self, x: int, y: int) -> bool:
        return bool(self.below[self.check_index(y)] >> self.check_index(x) & 1)

    def ortho(self, x: int) -> int:
        return self.ortho_table[self.check_index(x)]

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[self.check_index(x)][self.check_index(y)]

    def join(self, x: int, y: int) -> int:
        return self.join_table[self.check_index(x)][self.check_index(y)]

    def orthogonal(self, x: int, y: int) -> bool:
        """x ⊥ y, i.e. x <= y'."""
        return self.leq(x, self.ortho(y))

    def label(self, x: int) -> str:
        return self.labels[self.check_index(x)]

    def atoms(self) -> list[int]:
        """Elements covering the bottom."""
        return [x for x in range(1, self.size) if self.below[x] == (1 | 1 << x)]

    def atom(self, name: str) -> int:
        """Element id of the diagram atom ``name``."""
        if self.structure is not None and name in self.structure.atom_names:
            return self.structure.atoms[self.structure.atom_names.index(name)]
        raise KeyError(f"no atom named {name!r} in {self.name or 'lattice'}")

    def index(self, label: str) -> int:
        """Element id for a display label (first match)."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    # ── Derived tables ───────────────────────────────────────────────────────

    def orth_neighbors(self, x: int) -> tuple[int, ...]:
        """Sorted elements y with x ⊥ y."""
        if self._orth_neighbors is None:
            self._orth_neighbors = tuple(
                tuple(bits(self.below[self.ortho_table[v]])) for v in range(self.size)
            )
        return self._orth_neighbors[x]

    @property
    def sasaki_table(self) -> tuple[tuple[int, ...], ...]:
        """x -> y = x' v (x ^ y) for every pair."""
        if self._sasaki is None:
            ortho, meet, join = self.ortho_table, self.meet_table, self.join_table
            self._sasaki = tuple(
                tuple(join[ortho[x]][meet[x][y]] for y in range(self.size))
                for x in range(self.size)
            )
        return self._sasaki

    @property
    def equiv_table(self) -> tuple[tuple[int, ...], ...]:
        """x == y = (x ^ y) v (x' ^ y') for every pair."""
        if self._equiv is None:
            ortho, meet, join = self.ortho_table, self.meet_table, self.join_table
            self._equiv = tuple(
                tuple(join[meet[x][y]][meet[ortho[x]][ortho[y]]] for y in range(self.size))
                for x in range(self.size)
            )
        return self._equiv

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs (x, y): x < y with nothing strictly between."""
        pairs = []
        for y in range(self.size):
            strict = self.below[y] & ~(1 << y)
            for x in bits(strict):
                between = strict & self.above[x] & ~(1 << x)
                if not between:
                    pairs.append((x, y))
        return pairs

    # ── Identity ─────────────────────────────────────────────────────────────

    def dump_table(self) -> str:
        """Deterministic text table: element list with orthocomplements, then the leq matrix."""
        lines = [f"elements {self.size}"]
        for x, label in enumerate(self.labels):
            lines.append(f"{x} {label} {self.ortho_table[x]}")
        lines.append("leq")
        for x in range(self.size):
            lines.append("".join("1" if self.below[y] >> x & 1 else "0" for y in range(self.size)))
        return "\n".join(lines) + "\n"

    @property
    def digest(self) -> str:
        if self._digest is None:
            self._digest = hashlib.sha256(self.dump_table().encode()).hexdigest()
        return self._digest

    def __getstate__(self) -> dict[str, object]:
        return {slot: getattr(self, slot) for slot in self.__slots__}

    def __setstate__(self, state: dict[str, object]) -> None:
        for slot, value in state.items():
            object.__setattr__(self, slot, value)
