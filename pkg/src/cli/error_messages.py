"""One-line messages and exit codes for errors that reach the command line."""

import logging

from pydantic import ValidationError

from src.errors import (
    AtomAlphabetExhaustedError,
    BadParameterError,
    CheckerError,
    FixtureError,
    GreechieError,
    InvalidDiagramError,
    LatticeError,
    ManifestError,
    NotGreechieBackedError,
    ReadoffFailedError,
    TermError,
    UnknownLatticeError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_INCONCLUSIVE = 3


def get_user_message(error: Exception) -> str:
    """Map an exception to a one-line message for stderr."""
    if isinstance(error, FileNotFoundError):
        return f"File not found: {error.filename}"
    if isinstance(error, OSError):
        return f"Could not read or write {error.filename or 'a file'}: {error.strerror}"
    if isinstance(error, InvalidDiagramError):
        return f"Invalid Greechie diagram: {error}"
    if isinstance(error, AtomAlphabetExhaustedError):
        return f"Diagram too large for the text format: {error}"
    if isinstance(error, GreechieError):
        return f"Could not parse the diagram: {error}"
    if isinstance(error, UnknownLatticeError):
        return f"Unknown built-in lattice {error.name!r}; try O6, MO2, Boolean:N or Chain2"
    if isinstance(error, LatticeError):
        return f"Could not build the lattice: {error}"
    if isinstance(error, FixtureError):
        return f"Fixture problem: {error}"
    if isinstance(error, BadParameterError):
        return f"Bad family or parameter: {error}"
    if isinstance(error, TermError):
        return f"Bad equation: {error}"
    if isinstance(error, NotGreechieBackedError):
        return f"States need an atom/block structure: {error}"
    if isinstance(error, ReadoffFailedError):
        return f"Read-off failed: {error}"
    if isinstance(error, ManifestError):
        return f"Bad run manifest: {error}"
    if isinstance(error, ValidationError):
        first = error.errors()[0]
        return f"Bad input: {first.get('msg', error)}"
    if isinstance(error, CheckerError):
        return f"Internal checker error: {error}"
    return f"Unexpected error: {error}"


def exit_code_for(error: Exception) -> int:
    if isinstance(error, InvalidDiagramError | ReadoffFailedError):
        return EXIT_FAILED
    return EXIT_BAD_INPUT
