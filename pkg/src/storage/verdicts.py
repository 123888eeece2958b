import json
import logging
from pathlib import Path

import aiosqlite

from src.models.enums import VerdictStatus
from src.models.verdict import Verdict

logger = logging.getLogger(__name__)


class VerdictCache:
    """Async SQLite store of checker verdicts.

    Records are keyed by (lattice digest, family key, strategy key). The
    table is append-only; ``get`` returns the latest record for a key.
    """

    def __init__(self, db_path: Path | str) -> None:
        self.db_path = str(db_path)
        self.connection: aiosqlite.Connection | None = None

    async def initialize(self) -> None:
        """Open connection, enable WAL mode, execute schema."""
        if self.db_path != ":memory:":
            Path(self.db_path).parent.mkdir(parents=True, exist_ok=True)
        self.connection = await aiosqlite.connect(self.db_path)
        self.connection.row_factory = aiosqlite.Row
        schema_sql = (Path(__file__).parent / "schema.sql").read_text()
        await self.connection.executescript(schema_sql)
        await self.connection.execute("PRAGMA journal_mode=WAL")
        await self.connection.commit()
        logger.info("Verdict cache opened at %s", self.db_path)

    async def close(self) -> None:
        if self.connection:
            await self.connection.close()
            self.connection = None

    async def __aenter__(self) -> "VerdictCache":
        await self.initialize()
        return self

    async def __aexit__(
        self, exc_type: type | None, exc_val: Exception | None, exc_tb: object
    ) -> None:
        await self.close()

    async def get(self, lattice_digest: str, family_key: str, strategy_key: str) -> Verdict | None:
        assert self.connection is not None
        cursor = await self.connection.execute(
            """SELECT * FROM verdicts
               WHERE lattice_digest = ? AND family_key = ? AND strategy_key = ?
               ORDER BY id DESC LIMIT 1""",
            (lattice_digest, family_key, strategy_key),
        )
        row = await cursor.fetchone()
        if row is None:
            return None
        return Verdict(
            status=VerdictStatus(row["status"]),
            counterexample=json.loads(row["counterexample"]) if row["counterexample"] else None,
            counterexample_labels=(
                json.loads(row["counterexample_labels"]) if row["counterexample_labels"] else None
            ),
            assignments_examined=row["assignments_examined"],
            pruned_subtrees=row["pruned_subtrees"],
            elapsed=row["elapsed"],
            cached=True,
        )

    async def put(
        self, lattice_digest: str, family_key: str, strategy_key: str, verdict: Verdict
    ) -> None:
        assert self.connection is not None
        await self.connection.execute(
            """INSERT INTO verdicts
               (lattice_digest, family_key, strategy_key, status, counterexample,
                counterexample_labels, assignments_examined, pruned_subtrees, elapsed)
               VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?)""",
            (
                lattice_digest,
                family_key,
                strategy_key,
                verdict.status.value,
                json.dumps(verdict.counterexample) if verdict.counterexample is not None else None,
                (
                    json.dumps(verdict.counterexample_labels)
                    if verdict.counterexample_labels is not None
                    else None
                ),
                verdict.assignments_examined,
                verdict.pruned_subtrees,
                verdict.elapsed,
            ),
        )
        await self.connection.commit()

    async def count(self) -> int:
        assert self.connection is not None
        cursor = await self.connection.execute("SELECT COUNT(*) FROM verdicts")
        row = await cursor.fetchone()
        return int(row[0]) if row else 0
