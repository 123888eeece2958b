"""Fixture lattice corpus shipped with the package.

Each fixture is a Greechie text file under ``data/``; ``manifest.txt`` lists
them as ``key: value`` blocks separated by ``---`` lines.
"""

import logging
from functools import cache
from importlib.resources import files

from src.errors import FixtureError
from src.greechie import parse
from src.models.enums import Outcome
from src.models.family import Claim, Fixture

logger = logging.getLogger(__name__)

_DATA = files("src.families") / "data"


def parse_manifest(text: str) -> list[dict[str, str]]:
    """Split ``key: value`` blocks on ``---``; '#' lines are comments."""
    records: list[dict[str, str]] = []
    current: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "---":
            if current:
                records.append(current)
            current = {}
            continue
        key, sep, value = line.partition(":")
        if not sep or not key.strip():
            raise FixtureError(f"manifest line {lineno}: expected 'key: value', got {raw!r}")
        current[key.strip().lower()] = value.strip()
    if current:
        records.append(current)
    return records


def _parse_claims(text: str, fixture_id: str) -> tuple[Claim, ...]:
    claims = []
    for item in filter(None, (part.strip() for part in text.split(","))):
        subject, sep, outcome = item.rpartition("=")
        if not sep or outcome.strip() not in {o.value for o in Outcome}:
            raise FixtureError(f"{fixture_id}: bad claim {item!r}")
        claims.append(Claim(subject=subject.strip(), outcome=Outcome(outcome.strip())))
    return tuple(claims)


@cache
def fixtures() -> tuple[Fixture, ...]:
    """All fixtures in manifest order."""
    records = parse_manifest((_DATA / "manifest.txt").read_text(encoding="utf-8"))
    loaded = []
    for record in records:
        missing = {"id", "file"} - record.keys()
        if missing:
            raise FixtureError(f"manifest record {record} lacks {sorted(missing)}")
        text = (_DATA / record["file"]).read_text(encoding="utf-8")
        loaded.append(
            Fixture(
                id=record["id"],
                file=record["file"],
                source=record.get("source", ""),
                diagram=parse(text),
                claims=_parse_claims(record.get("claims", ""), record["id"]),
            )
        )
    logger.debug("Loaded %d fixtures", len(loaded))
    return tuple(loaded)


def fixture_ids() -> list[str]:
    return [f.id for f in fixtures()]


def load_fixture(fixture_id: str) -> Fixture:
    for fixture in fixtures():
        if fixture.id == fixture_id:
            return fixture
    raise FixtureError(f"unknown fixture {fixture_id!r}")
