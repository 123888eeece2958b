"""Exception hierarchy for the workbench.

Every error raised on purpose derives from :class:`WorkbenchError`; the CLI
maps the families below to exit codes and one-line messages.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from src.models.diagram import ValidationReport


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


# ── Greechie diagrams ────────────────────────────────────────────────────────


class GreechieError(WorkbenchError):
    """Malformed or unusable Greechie diagram text."""


class EmptyInputError(GreechieError):
    """The input contains no blocks."""


class IllegalCharacterError(GreechieError):
    def __init__(self, char: str, line: int, column: int) -> None:
        self.char = char
        self.line = line
        self.column = column
        super().__init__(f"illegal character {char!r} at line {line}, column {column}")


class DuplicateAtomInBlockError(GreechieError):
    def __init__(self, atom: str, block: int) -> None:
        self.atom = atom
        self.block = block
        super().__init__(f"atom {atom!r} repeated in block {block}")


class EmptyBlockError(GreechieError):
    def __init__(self, block: int) -> None:
        self.block = block
        super().__init__(f"block {block} is empty")


class AtomAlphabetExhaustedError(GreechieError):
    def __init__(self, count: int) -> None:
        self.count = count
        super().__init__(f"{count} atoms do not fit the 61-character atom alphabet")


class InvalidDiagramError(GreechieError):
    """The diagram fails one of the Greechie conditions."""

    def __init__(self, report: ValidationReport) -> None:
        self.report = report
        failed = ", ".join(str(c.condition) for c in report.conditions if not c.passed)
        super().__init__(f"not a Greechie diagram: conditions {failed} fail")


# ── Lattices ─────────────────────────────────────────────────────────────────


class LatticeError(WorkbenchError):
    """Lattice construction or lookup failure."""


class NotALatticeError(LatticeError):
    """The pasted orthoposet is not a lattice."""

    def __init__(
        self,
        message: str,
        pair: tuple[str, str] | None = None,
        loop: list[str] | None = None,
    ) -> None:
        self.pair = pair
        self.loop = loop
        super().__init__(message)


class UnknownLatticeError(LatticeError):
    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"unknown built-in lattice {name!r}")


class IndexOutOfRangeError(LatticeError):
    def __init__(self, index: int, size: int) -> None:
        self.index = index
        self.size = size
        super().__init__(f"element index {index} outside 0..{size - 1}")


# ── Terms ────────────────────────────────────────────────────────────────────


class TermError(WorkbenchError):
    """Term construction, evaluation or notation error."""


class UnboundVariableError(TermError):
    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"variable {name!r} is not bound")


class CondensedSyntaxError(TermError):
    """Malformed condensed state equation."""


class RepeatedVariableInTermError(TermError):
    def __init__(self, variable: str, term: str) -> None:
        self.variable = variable
        self.term = term
        super().__init__(f"variable {variable!r} repeated in term {term!r}")


class UnbalancedEquationError(TermError):
    def __init__(self, counts: dict[str, tuple[int, int]]) -> None:
        self.counts = counts
        detail = ", ".join(f"{v}: {lhs} vs {rhs}" for v, (lhs, rhs) in sorted(counts.items()))
        super().__init__(f"unbalanced condensed equation ({detail})")


# ── Families ─────────────────────────────────────────────────────────────────


class FamilyError(WorkbenchError):
    """Equation family or fixture error."""


class BadParameterError(FamilyError):
    """Family parameters out of range or unparseable."""


class GeneratorInvalidError(FamilyError):
    """A generated object failed its own self-validation."""


class FixtureError(FamilyError):
    """Unknown fixture or malformed fixture manifest."""


# ── Checker ──────────────────────────────────────────────────────────────────


class CheckerError(WorkbenchError):
    """Model checker failure."""


class CounterexampleVerificationError(CheckerError):
    """A reported counterexample did not survive direct re-evaluation."""


# ── States ───────────────────────────────────────────────────────────────────


class StatesError(WorkbenchError):
    """State polytope failure."""


class NotGreechieBackedError(StatesError):
    """The lattice has no atom/block structure."""


class ReadoffFailedError(StatesError):
    """No balanced, verified-failing equation was read off the certificate."""


# ── CLI ──────────────────────────────────────────────────────────────────────


class ManifestError(WorkbenchError):
    """Malformed run manifest."""
