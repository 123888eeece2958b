from src.greechie.parser import ATOM_ALPHABET, parse, renamed, serialize
from src.greechie.validation import find_loops, validate

__all__ = ["ATOM_ALPHABET", "find_loops", "parse", "renamed", "serialize", "validate"]
