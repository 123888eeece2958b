"""Resolving lattice arguments: fixture ids, diagram files, built-ins, wagon wheels."""

import logging
from pathlib import Path

from src.errors import FixtureError
from src.families.fixtures import fixture_ids, load_fixture
from src.families.wagon_wheel import wagon_wheel
from src.greechie import parse
from src.lattice import Lattice, build, builtin
from src.models.diagram import GreechieDiagram

logger = logging.getLogger(__name__)


def resolve_fixture_id(text: str, base: Path | None = None) -> str | None:
    """Full fixture id for ``text``; short forms like ``13-7`` or ``35-23#1`` are accepted.

    An existing file named ``text`` (relative to ``base`` when given) wins over any id.
    """
    if (base / text if base is not None else Path(text)).is_file():
        return None
    ids = fixture_ids()
    if text in ids:
        return text
    stem, sep, number = text.partition("#")
    matches = [
        fid
        for fid in ids
        if fid.startswith(stem) and (not sep or fid.endswith(f"#{number}"))
    ]
    if len(matches) == 1:
        return matches[0]
    if len(matches) > 1:
        raise FixtureError(f"{text!r} matches several fixtures: {', '.join(matches)}")
    return None


def load_diagram(source: str) -> tuple[str, GreechieDiagram]:
    """(name, diagram) from a fixture id or a diagram file."""
    fixture_id = resolve_fixture_id(source)
    if fixture_id is not None:
        return fixture_id, load_fixture(fixture_id).diagram
    path = Path(source)
    text = path.read_text(encoding="utf-8")
    return path.stem, parse(text)


def load_lattice(
    lattice: str | None = None, builtin_name: str | None = None, wagon: int | None = None
) -> Lattice:
    if builtin_name is not None:
        return builtin(builtin_name)
    if wagon is not None:
        return wagon_wheel(wagon).lattice
    if lattice is None:
        raise FixtureError("no lattice given")
    name, diagram = load_diagram(lattice)
    return build(diagram, name=name)
