"""Hand-built small lattices: the hexagon O6, MO2, Boolean algebras and the two-element chain."""

from src.errors import BadParameterError, UnknownLatticeError
from src.lattice.core import BlockStructure, Lattice, transitive_closure
from src.models.enums import BuiltinName

_LETTERS = "abcdef"


def _from_relations(labels: list[str], relations: list[tuple[str, str]]) -> list[int]:
    """Down-set bitsets from ``x <= y`` pairs (bounds added, closure taken)."""
    index = {label: i for i, label in enumerate(labels)}
    n = len(labels)
    below = [1 << x | 1 for x in range(n)]
    below[n - 1] = (1 << n) - 1
    for lo, hi in relations:
        below[index[hi]] |= 1 << index[lo]
    return transitive_closure(below)


def o6() -> Lattice:
    """The benzene-ring ortholattice: 0 < a < b < 1 and 0 < b' < a' < 1."""
    labels = ["0", "a", "b", "b'", "a'", "1"]
    below = _from_relations(labels, [("a", "b"), ("b'", "a'")])
    return Lattice(labels, below, [5, 4, 3, 2, 1, 0], name="O6")


def mo2() -> Lattice:
    """Two four-element Boolean blocks glued at 0 and 1."""
    labels = ["0", "x", "x'", "y", "y'", "1"]
    below = _from_relations(labels, [])
    structure = BlockStructure(
        atom_names=("x", "x'", "y", "y'"),
        atoms=(1, 2, 3, 4),
        blocks=((1, 2), (3, 4)),
        element_atoms=((), (1,), (2,), (3,), (4,), (1, 2)),
    )
    return Lattice(labels, below, [5, 2, 1, 4, 3, 0], name="MO2", structure=structure)


def boolean(n: int) -> Lattice:
    """The Boolean algebra 2^n; element ``mask`` is the set of atoms in its bits."""
    if not 1 <= n <= 6:
        raise BadParameterError(f"Boolean(n) needs 1 <= n <= 6, got {n}")
    size = 1 << n
    full = size - 1
    labels = []
    for mask in range(size):
        if mask == 0:
            labels.append("0")
        elif mask == full:
            labels.append("1")
        else:
            labels.append("".join(_LETTERS[i] for i in range(n) if mask >> i & 1))
    below = [0] * size
    for mask in range(size):
        for sub in range(size):
            if sub & mask == sub:
                below[mask] |= 1 << sub
    atoms = tuple(1 << i for i in range(n))
    structure = BlockStructure(
        atom_names=tuple(_LETTERS[:n]),
        atoms=atoms,
        blocks=(atoms,),
        element_atoms=tuple(
            tuple(1 << i for i in range(n) if mask >> i & 1) for mask in range(size)
        ),
    )
    ortho = [full ^ mask for mask in range(size)]
    return Lattice(labels, below, ortho, name=f"Boolean({n})", structure=structure)


def chain2() -> Lattice:
    structure = BlockStructure(
        atom_names=("p",), atoms=(1,), blocks=((1,),), element_atoms=((), (1,))
    )
    return Lattice(["0", "1"], [0b01, 0b11], [1, 0], name="Chain2", structure=structure)


def builtin(name: BuiltinName | str, n: int | None = None) -> Lattice:
    """Look up a built-in lattice by name.

    ``Boolean`` takes ``n``, also accepted as ``Boolean:n``.
    """
    text = str(name)
    if ":" in text:
        text, _, arg = text.partition(":")
        try:
            n = int(arg)
        except ValueError:
            raise UnknownLatticeError(str(name)) from None
    lookup = {member.value.lower(): member for member in BuiltinName}
    member = lookup.get(text.lower())
    if member is None:
        raise UnknownLatticeError(str(name))
    if member is BuiltinName.O6:
        return o6()
    if member is BuiltinName.MO2:
        return mo2()
    if member is BuiltinName.CHAIN2:
        return chain2()
    if n is None:
        raise BadParameterError("Boolean needs a size, e.g. Boolean:3")
    return boolean(n)


def builtin_names() -> list[str]:
    return ["O6", "MO2", *(f"Boolean:{k}" for k in range(1, 7)), "Chain2"]


__all__ = ["boolean", "builtin", "builtin_names", "chain2", "mo2", "o6"]
