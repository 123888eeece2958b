"""Textual Greechie notation: ``123,345,567,789,9AB,BC1,2D8.``

Blocks are runs of atom characters separated by commas, with an optional
terminating period. Lines whose first non-blank character is ``#`` are
comments; whitespace between tokens is ignored and CRLF is accepted.
"""

import logging

from src.errors import (
    AtomAlphabetExhaustedError,
    DuplicateAtomInBlockError,
    EmptyBlockError,
    EmptyInputError,
    IllegalCharacterError,
)
from src.models.diagram import GreechieDiagram

logger = logging.getLogger(__name__)

ATOM_ALPHABET = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"
_ALPHABET_SET = frozenset(ATOM_ALPHABET)


def parse(text: str) -> GreechieDiagram:
    """Parse the textual notation into a diagram.

    Only block-level structure is enforced here (no empty blocks, no repeated
    atom inside a block). The Greechie conditions are checked by
    :func:`src.greechie.validation.validate`.
    """
    blocks: list[list[str]] = []
    current: list[str] = []
    seen_any = False
    terminated = False

    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.rstrip("\r")
        if line.lstrip().startswith("#"):
            continue
        for col, char in enumerate(line, start=1):
            if char.isspace():
                continue
            if terminated:
                raise IllegalCharacterError(char, line_no, col)
            if char in _ALPHABET_SET:
                if char in current:
                    raise DuplicateAtomInBlockError(char, len(blocks))
                current.append(char)
                seen_any = True
            elif char in ",.":
                if not current:
                    raise EmptyBlockError(len(blocks))
                blocks.append(current)
                current = []
                terminated = char == "."
            else:
                raise IllegalCharacterError(char, line_no, col)

    if current:
        blocks.append(current)
    if not seen_any:
        raise EmptyInputError("no blocks in input")

    diagram = GreechieDiagram.from_blocks(blocks)
    logger.debug("Parsed %d atoms in %d blocks", len(diagram.atoms), len(diagram.blocks))
    return diagram


def serialize(diagram: GreechieDiagram) -> str:
    """Canonical text: blocks and atoms in input order, comma-separated, final period.

    Atom names outside the single-character alphabet are renamed onto the
    alphabet in atom order.
    """
    names = list(diagram.atoms)
    if not all(len(a) == 1 and a in _ALPHABET_SET for a in names):
        if len(names) > len(ATOM_ALPHABET):
            raise AtomAlphabetExhaustedError(len(names))
        rename = dict(zip(names, ATOM_ALPHABET, strict=False))
    else:
        rename = {a: a for a in names}
    return ",".join("".join(rename[a] for a in block.atoms) for block in diagram.blocks) + "."


def renamed(diagram: GreechieDiagram) -> GreechieDiagram:
    """The diagram with atoms renamed onto the alphabet, as :func:`serialize` prints it."""
    return parse(serialize(diagram))


__all__ = ["ATOM_ALPHABET", "parse", "renamed", "serialize"]
