from pydantic import BaseModel

from src.models.enums import LatticeProperty


class PropertyReport(BaseModel):
    property: LatticeProperty
    holds: bool
    witness: list[int] = []
    witness_labels: list[str] = []
    note: str = ""


class LatticeSummary(BaseModel):
    name: str
    size: int
    atoms: int
    blocks: int | None = None
    digest: str
    properties: list[PropertyReport] = []
