"""Hasse-diagram DOT export."""

from src.lattice.core import Lattice


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(lat: Lattice) -> str:
    """Covering relation as a DOT digraph, bottom to top."""
    name = lat.name or "lattice"
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for x, label in enumerate(lat.labels):
        lines.append(f"  n{x} [label={_quote(label)}];")
    for lo, hi in lat.covers():
        lines.append(f"  n{lo} -> n{hi} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
