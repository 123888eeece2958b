"""Line-delimited JSON reports."""

from __future__ import annotations

import sys
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import IO, Any

from src.lattice.core import Lattice
from src.models.report import Provenance, Report
from src.models.verdict import Verdict

_DIST = "quantum-logic-workbench"


def tool_version() -> str:
    try:
        return version(_DIST)
    except PackageNotFoundError:
        return "0.1.0"


def provenance(
    lattice: Lattice | None = None,
    strategy: str | None = None,
    elapsed: float | None = None,
) -> Provenance:
    return Provenance(
        tool_version=tool_version(),
        lattice=lattice.name if lattice is not None else None,
        lattice_digest=lattice.digest if lattice is not None else None,
        strategy=strategy,
        elapsed=round(elapsed, 6) if elapsed is not None else None,
    )


def verdict_payload(verdict: Verdict, family: str, inference: str) -> dict[str, Any]:
    """Verdict fields that do not depend on timing or on the cache."""
    return {
        "family": family,
        "inference": inference,
        "counterexample": verdict.counterexample,
        "counterexample_labels": verdict.counterexample_labels,
        "assignments_examined": verdict.assignments_examined,
        "pruned_subtrees": verdict.pruned_subtrees,
    }


class ReportWriter:
    """Serializes every report through one stream; each output file is rewritten per run."""

    def __init__(self, stream: IO[str] | None = None) -> None:
        self.stream = stream or sys.stdout
        self._files: dict[Path, IO[str]] = {}

    def write(self, report: Report, path: Path | None = None) -> None:
        target = self.stream
        if path is not None:
            if path not in self._files:
                path.parent.mkdir(parents=True, exist_ok=True)
                self._files[path] = path.open("w", encoding="utf-8")
            target = self._files[path]
        target.write(report.line() + "\n")
        target.flush()

    def close(self) -> None:
        for handle in self._files.values():
            handle.close()
        self._files.clear()

    def __enter__(self) -> ReportWriter:
        return self

    def __exit__(self, *exc: object) -> None:
        self.close()
