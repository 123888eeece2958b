from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

REPORT_SCHEMA = "qlw-report/1"


class Provenance(BaseModel):
    tool_version: str
    lattice: str | None = None
    lattice_digest: str | None = None
    strategy: str | None = None
    elapsed: float | None = None


class Report(BaseModel):
    """One line of a report file.

    Field order is the serialization order, so reports for the same inputs
    are byte-identical. Timing is only included on request.
    """

    model_config = ConfigDict(populate_by_name=True)

    schema_: str = Field(default=REPORT_SCHEMA, alias="schema")
    job: str
    command: str
    status: str
    payload: dict[str, Any] = Field(default_factory=dict)
    provenance: Provenance

    def line(self) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True)


class RunJob(BaseModel):
    id: str
    lattice: str | None = None
    builtin: str | None = None
    family: str
    strategy: str = "exhaustive"
    output: str | None = None

    @model_validator(mode="after")
    def _one_source(self) -> "RunJob":
        if (self.lattice is None) == (self.builtin is None):
            raise ValueError(f"job {self.id!r} needs exactly one of lattice or builtin")
        return self


class RunManifest(BaseModel):
    jobs: list[RunJob]
    workers: int = Field(default=1, ge=1)
    cache: str | None = None

    @field_validator("jobs")
    @classmethod
    def _unique_ids(cls, jobs: list[RunJob]) -> list[RunJob]:
        seen: set[str] = set()
        for job in jobs:
            if job.id in seen:
                raise ValueError(f"duplicate job id {job.id!r}")
            seen.add(job.id)
        return jobs
