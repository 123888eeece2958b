"""Paste the Boolean blocks of a Greechie diagram into one orthoposet and check it is a lattice."""

import logging
from itertools import combinations

from src.errors import InvalidDiagramError, NotALatticeError
from src.greechie.validation import validate
from src.lattice.core import BlockStructure, Lattice, transitive_closure
from src.models.diagram import GreechieDiagram

logger = logging.getLogger(__name__)

Key = tuple


def _subset_key(block_index: int, block: tuple[str, ...], subset: frozenset[str]) -> Key:
    if not subset:
        return ("zero",)
    if len(subset) == len(block):
        return ("one",)
    if len(subset) == 1:
        return ("atom", next(iter(subset)))
    if len(subset) == len(block) - 1:
        (missing,) = set(block) - subset
        return ("co", missing)
    return ("sub", block_index, subset)


def _label(key: Key, block: tuple[str, ...]) -> str:
    kind = key[0]
    if kind == "zero":
        return "0"
    if kind == "one":
        return "1"
    if kind == "atom":
        return key[1]
    if kind == "co":
        return f"{key[1]}'"
    members = [a for a in block if a in key[2]]
    return "{" + ",".join(members) + "}"


def _proper_subsets(block: tuple[str, ...]) -> list[frozenset[str]]:
    subsets = []
    for size in range(1, len(block)):
        for combo in combinations(block, size):
            subsets.append(frozenset(combo))
    return subsets


def build(diagram: GreechieDiagram, name: str = "") -> Lattice:
    """Paste ``diagram`` into its orthomodular lattice.

    Raises:
        InvalidDiagramError: a Greechie condition fails.
        NotALatticeError: a loop of order 4 exists, or some pair has no unique bound.
    """
    report = validate(diagram)
    if not report.valid:
        raise InvalidDiagramError(report)
    if report.order4_loops:
        loop = report.order4_loops[0]
        raise NotALatticeError(
            f"loop of order 4 through blocks {list(loop.blocks)}",
            loop=list(loop.junction_atoms),
        )

    if len(diagram.atoms) == 1:
        return _single_atom(diagram, name)

    blocks = [b.atoms for b in diagram.blocks]
    keys: dict[Key, int] = {("zero",): 0}
    labels = ["0"]
    reps: list[tuple[int, frozenset[str]]] = [(0, frozenset())]

    def add(key: Key, block_index: int, subset: frozenset[str]) -> None:
        if key not in keys:
            keys[key] = len(labels)
            labels.append(_label(key, blocks[block_index]))
            reps.append((block_index, subset))

    for atom in diagram.atoms:
        home = diagram.blocks_containing(atom)[0]
        add(("atom", atom), home, frozenset((atom,)))

    for b, block in enumerate(blocks):
        for subset in sorted(_proper_subsets(block), key=lambda s: _subset_order(block, s)):
            if len(subset) == 1:
                continue
            key = _subset_key(b, block, subset)
            if key in keys:
                continue
            add(key, b, subset)
            complement = frozenset(block) - subset
            co_key = _subset_key(b, block, complement)
            if co_key[0] != "atom":
                add(co_key, b, complement)

    top = len(labels)
    keys[("one",)] = top
    labels.append("1")
    reps.append((0, frozenset(blocks[0])))
    n = len(labels)

    below = [1 << x for x in range(n)]
    for x in range(n):
        below[x] |= 1
    below[top] = (1 << n) - 1
    for b, block in enumerate(blocks):
        members = [(s, keys[_subset_key(b, block, s)]) for s in _proper_subsets(block)]
        for s, x in members:
            for t, y in members:
                if s < t:
                    below[y] |= 1 << x
    below = transitive_closure(below)

    ortho = [0] * n
    for x, (b, subset) in enumerate(reps):
        if x in (0, top):
            ortho[x] = top - x
            continue
        complement = frozenset(blocks[b]) - subset
        ortho[x] = keys[_subset_key(b, blocks[b], complement)]

    atom_ids = tuple(keys[("atom", a)] for a in diagram.atoms)
    element_atoms = []
    for x, (b, subset) in enumerate(reps):
        members = [a for a in blocks[b] if a in subset]
        element_atoms.append(tuple(keys[("atom", a)] for a in members))
    structure = BlockStructure(
        atom_names=diagram.atoms,
        atoms=atom_ids,
        blocks=tuple(tuple(keys[("atom", a)] for a in block) for block in blocks),
        element_atoms=tuple(element_atoms),
    )

    lattice = Lattice(labels, below, ortho, name=name, structure=structure, diagram=diagram)
    logger.info("Built lattice %s: %d elements, digest %s", name or "?", n, lattice.digest[:12])
    return lattice


def _subset_order(block: tuple[str, ...], subset: frozenset[str]) -> tuple[int, tuple[int, ...]]:
    return len(subset), tuple(i for i, a in enumerate(block) if a in subset)


def _single_atom(diagram: GreechieDiagram, name: str) -> Lattice:
    """One block with one atom: the atom is the top, giving the two-element chain."""
    structure = BlockStructure(
        atom_names=diagram.atoms,
        atoms=(1,),
        blocks=tuple((1,) for _ in diagram.blocks),
        element_atoms=((), (1,)),
    )
    return Lattice(
        ["0", "1"], [0b01, 0b11], [1, 0], name=name, structure=structure, diagram=diagram
    )
