from src.lattice.builtins import boolean, builtin, builtin_names, chain2, mo2, o6
from src.lattice.core import BlockStructure, Lattice, bits
from src.lattice.export import to_dot
from src.lattice.pasting import build
from src.lattice.properties import check_property, summarize

__all__ = [
    "BlockStructure",
    "Lattice",
    "bits",
    "boolean",
    "build",
    "builtin",
    "builtin_names",
    "chain2",
    "check_property",
    "mo2",
    "o6",
    "summarize",
    "to_dot",
]
