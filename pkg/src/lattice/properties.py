"""Exhaustive checks of the finitely verifiable lattice axioms."""

import logging
from collections.abc import Callable, Iterator
from itertools import product

from src.lattice.core import Lattice, bits
from src.models.enums import LatticeProperty
from src.models.lattice import LatticeSummary, PropertyReport

logger = logging.getLogger(__name__)

Witness = tuple[int, ...] | None


def _ortholattice(lat: Lattice) -> Witness:
    ortho, meet, join = lat.ortho_table, lat.meet_table, lat.join_table
    for x in range(lat.size):
        if ortho[ortho[x]] != x or meet[x][ortho[x]] != lat.zero or join[x][ortho[x]] != lat.one:
            return (x,)
    for x, y in product(range(lat.size), repeat=2):
        if lat.below[y] >> x & 1 and not lat.below[ortho[x]] >> ortho[y] & 1:
            return (x, y)
    return None


def _orthomodular(lat: Lattice) -> Witness:
    ortho, meet, join = lat.ortho_table, lat.meet_table, lat.join_table
    for b in range(lat.size):
        for a in bits(lat.below[b]):
            if join[a][meet[ortho[a]][b]] != b:
                return (a, b)
    return None


def _modular(lat: Lattice) -> Witness:
    meet, join = lat.meet_table, lat.join_table
    for c in range(lat.size):
        for a in bits(lat.below[c]):
            for b in range(lat.size):
                if join[a][meet[b][c]] != meet[join[a][b]][c]:
                    return (a, b, c)
    return None


def _distributive(lat: Lattice) -> Witness:
    meet, join = lat.meet_table, lat.join_table
    for a, b, c in product(range(lat.size), repeat=3):
        if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
            return (a, b, c)
    return None


def _atomic(lat: Lattice) -> Witness:
    atom_mask = sum(1 << a for a in lat.atoms())
    for x in range(1, lat.size):
        if not lat.below[x] & atom_mask:
            return (x,)
    return None


def _atomistic(lat: Lattice) -> Witness:
    atoms = lat.atoms()
    for x in range(1, lat.size):
        acc = lat.zero
        for a in atoms:
            if lat.below[x] >> a & 1:
                acc = lat.join_table[acc][a]
        if acc != x:
            return (x,)
    return None


def _superposition_a(lat: Lattice) -> Witness:
    atoms = lat.atoms()
    for a, b in product(atoms, repeat=2):
        if a == b:
            continue
        upper = lat.below[lat.join_table[a][b]]
        if not any(upper >> c & 1 for c in atoms if c not in (a, b)):
            return (a, b)
    return None


def _superposition_b(lat: Lattice) -> Witness:
    atoms = lat.atoms()
    join = lat.join_table
    for a, b in product(atoms, repeat=2):
        if a == b:
            continue
        upper = lat.below[join[a][b]]
        for c in atoms:
            if c in (a, b) or not upper >> c & 1:
                continue
            if not lat.below[join[b][c]] >> a & 1:
                return (a, b, c)
    return None


def _minimal_length(lat: Lattice) -> Witness:
    top_mask = 1 << lat.one | 1
    for b in range(1, lat.one):
        has_lower = lat.below[b] & ~top_mask & ~(1 << b)
        has_upper = lat.above[b] & ~top_mask & ~(1 << b)
        if has_lower and has_upper:
            return None
    return ()


def _complete(lat: Lattice) -> Witness:
    return None


_CHECKS: dict[LatticeProperty, Callable[[Lattice], Witness]] = {
    LatticeProperty.ORTHOLATTICE: _ortholattice,
    LatticeProperty.ORTHOMODULAR: _orthomodular,
    LatticeProperty.MODULAR: _modular,
    LatticeProperty.DISTRIBUTIVE: _distributive,
    LatticeProperty.ATOMIC: _atomic,
    LatticeProperty.ATOMISTIC: _atomistic,
    LatticeProperty.COMPLETE: _complete,
    LatticeProperty.SUPERPOSITION_A: _superposition_a,
    LatticeProperty.SUPERPOSITION_B: _superposition_b,
    LatticeProperty.MINIMAL_LENGTH: _minimal_length,
}


def check_property(lat: Lattice, prop: LatticeProperty | str) -> PropertyReport:
    """Decide ``prop`` on ``lat`` by exhaustion; the witness falsifies it when it fails."""
    prop = LatticeProperty(prop)
    witness = _CHECKS[prop](lat)
    note = "finite lattices are complete" if prop is LatticeProperty.COMPLETE else ""
    if witness is None:
        return PropertyReport(property=prop, holds=True, note=note)
    return PropertyReport(
        property=prop,
        holds=False,
        witness=list(witness),
        witness_labels=[lat.labels[x] for x in witness],
    )


def iter_properties(lat: Lattice) -> Iterator[PropertyReport]:
    for prop in LatticeProperty:
        yield check_property(lat, prop)


def summarize(lat: Lattice) -> LatticeSummary:
    structure = lat.structure
    return LatticeSummary(
        name=lat.name,
        size=lat.size,
        atoms=len(lat.atoms()),
        blocks=len(structure.blocks) if structure is not None else None,
        digest=lat.digest,
        properties=list(iter_properties(lat)),
    )
