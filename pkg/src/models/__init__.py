from src.models.condensed import CondensedStateEquation
from src.models.diagram import Block, ConditionResult, GreechieDiagram, Loop, ValidationReport
from src.models.enums import (
    BuiltinName,
    FamilyName,
    LatticeProperty,
    LPStatus,
    Outcome,
    SearchMode,
    Sense,
    VariableOrder,
    VerdictStatus,
)
from src.models.family import Claim, FamilyId, Fixture
from src.models.lattice import LatticeSummary, PropertyReport
from src.models.report import REPORT_SCHEMA, Provenance, Report, RunJob, RunManifest
from src.models.states import (
    Certificate,
    PairWitness,
    ReadoffResult,
    StateReport,
    StateWitness,
    StrongSetReport,
)
from src.models.verdict import MatrixRow, Strategy, Verdict

__all__ = [
    "REPORT_SCHEMA",
    "Block",
    "BuiltinName",
    "Certificate",
    "Claim",
    "CondensedStateEquation",
    "ConditionResult",
    "FamilyId",
    "FamilyName",
    "Fixture",
    "GreechieDiagram",
    "LPStatus",
    "LatticeProperty",
    "LatticeSummary",
    "Loop",
    "MatrixRow",
    "Outcome",
    "PairWitness",
    "PropertyReport",
    "Provenance",
    "ReadoffResult",
    "Report",
    "RunJob",
    "RunManifest",
    "SearchMode",
    "Sense",
    "StateReport",
    "StateWitness",
    "Strategy",
    "StrongSetReport",
    "ValidationReport",
    "Verdict",
    "VerdictStatus",
]
