import logging

import pytest

from src.cli.main import main


@pytest.fixture(autouse=True)
def _restore_root_handlers():
    """Drop the console and file handlers main() installs."""
    root = logging.getLogger()
    before = list(root.handlers)
    level = root.level
    yield
    for handler in root.handlers[:]:
        if handler not in before:
            root.removeHandler(handler)
            handler.close()
    root.setLevel(level)


@pytest.fixture
def run_cli(capsys):
    """Run main(argv); returns (exit code, stdout, stderr)."""

    def run(*argv: str) -> tuple[int, str, str]:
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run

