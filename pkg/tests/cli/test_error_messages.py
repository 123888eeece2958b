import pytest
from pydantic import BaseModel, ValidationError

from src.cli.error_messages import (
    EXIT_BAD_INPUT,
    EXIT_FAILED,
    exit_code_for,
    get_user_message,
)
from src.errors import (
    BadParameterError,
    CounterexampleVerificationError,
    IllegalCharacterError,
    InvalidDiagramError,
    ManifestError,
    NotALatticeError,
    NotGreechieBackedError,
    ReadoffFailedError,
    UnknownLatticeError,
)
from src.greechie import validate
from tests.factories import make_diagram


class _Sized(BaseModel):
    n: int


def _validation_error() -> ValidationError:
    try:
        _Sized(n="many")
    except ValidationError as exc:
        return exc
    raise AssertionError("expected a validation error")


class TestGetUserMessage:
    @pytest.mark.parametrize(
        ("error", "prefix"),
        [
            (FileNotFoundError(2, "No such file", "x.txt"), "File not found: x.txt"),
            (PermissionError(13, "Permission denied", "y.txt"), "Could not read or write y.txt"),
            (UnknownLatticeError("Q7"), "Unknown built-in lattice 'Q7'"),
            (BadParameterError("noa needs n >= 3"), "Bad family or parameter"),
            (NotGreechieBackedError("O6"), "States need an atom/block structure"),
            (ReadoffFailedError("nothing"), "Read-off failed"),
            (ManifestError("no jobs"), "Bad run manifest"),
            (CounterexampleVerificationError("bad"), "Internal checker error"),
            (RuntimeError("boom"), "Unexpected error"),
        ],
    )
    def test_prefixes(self, error, prefix):
        assert get_user_message(error).startswith(prefix)

    def test_validation_error_uses_first_message(self):
        assert get_user_message(_validation_error()).startswith("Bad input: ")

    def test_illegal_character(self):
        error = IllegalCharacterError("?", 1, 3)
        assert get_user_message(error).startswith("Could not parse the diagram")


class TestExitCodeFor:
    def test_failures_versus_bad_input(self):
        assert exit_code_for(ReadoffFailedError("x")) == EXIT_FAILED
        assert exit_code_for(BadParameterError("x")) == EXIT_BAD_INPUT
        assert exit_code_for(FileNotFoundError()) == EXIT_BAD_INPUT

    def test_lattice_errors_are_bad_input(self):
        assert exit_code_for(NotALatticeError("square")) == EXIT_BAD_INPUT

    def test_invalid_diagram(self):
        error = InvalidDiagramError(validate(make_diagram("123,345,561.")))
        assert get_user_message(error).startswith("Invalid Greechie diagram")
        assert exit_code_for(error) == EXIT_FAILED
