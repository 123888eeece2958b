"""Run manifests: key: value blocks separated by '---'.

A block without an ``id`` is the header and may set ``workers`` and
``cache``. Every other block is one job.
"""

from pathlib import Path

from pydantic import ValidationError

from src.cli.sources import resolve_fixture_id
from src.config import get_settings
from src.errors import FixtureError, ManifestError
from src.families.fixtures import parse_manifest
from src.models.enums import SearchMode
from src.models.report import RunJob, RunManifest
from src.models.verdict import Strategy


def load_manifest(text: str) -> RunManifest:
    try:
        records = parse_manifest(text)
    except FixtureError as exc:
        raise ManifestError(str(exc)) from exc
    header: dict[str, str] = {}
    jobs: list[RunJob] = []
    try:
        for record in records:
            if "id" not in record:
                if jobs or header:
                    raise ManifestError(f"block without id after the header: {record}")
                header = record
                continue
            jobs.append(RunJob(**record))
        manifest = RunManifest(jobs=jobs, **header)
    except ValidationError as exc:
        raise ManifestError(exc.errors()[0]["msg"]) from exc
    if not manifest.jobs:
        raise ManifestError("manifest has no jobs")
    return manifest


def check_files(manifest: RunManifest, base: Path) -> None:
    """Every job naming a diagram file must point at an existing file."""
    for job in manifest.jobs:
        if job.lattice is None or resolve_fixture_id(job.lattice, base) is not None:
            continue
        if not (base / job.lattice).is_file():
            raise ManifestError(f"job {job.id!r}: lattice file {job.lattice!r} not found")


def parse_strategy(text: str, workers: int = 1) -> Strategy:
    """``exhaustive`` or ``search[:BUDGET[:SEED]]``."""
    head, *rest = text.strip().split(":")
    try:
        mode = SearchMode(head)
        numbers = [int(part) for part in rest]
    except ValueError:
        raise ManifestError(f"bad strategy {text!r}") from None
    if mode == SearchMode.EXHAUSTIVE:
        if numbers:
            raise ManifestError(f"exhaustive takes no parameters: {text!r}")
        return Strategy(workers=workers)
    if len(numbers) > 2:
        raise ManifestError(f"bad strategy {text!r}")
    settings = get_settings()
    fields = {"budget": settings.search_budget, "seed": settings.search_seed}
    fields.update(zip(("budget", "seed"), numbers, strict=False))
    try:
        return Strategy(mode=mode, workers=workers, **fields)
    except ValidationError as exc:
        raise ManifestError(exc.errors()[0]["msg"]) from exc
