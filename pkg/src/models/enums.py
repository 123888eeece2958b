from enum import StrEnum


class BuiltinName(StrEnum):
    O6 = "O6"
    MO2 = "MO2"
    BOOLEAN = "Boolean"
    CHAIN2 = "Chain2"


class LatticeProperty(StrEnum):
    ORTHOLATTICE = "ortholattice"
    ORTHOMODULAR = "orthomodular"
    MODULAR = "modular"
    DISTRIBUTIVE = "distributive"
    ATOMIC = "atomic"
    ATOMISTIC = "atomistic"
    COMPLETE = "complete"
    SUPERPOSITION_A = "superposition-a"
    SUPERPOSITION_B = "superposition-b"
    MINIMAL_LENGTH = "minimal-length"


class FamilyName(StrEnum):
    OML = "oml"
    MODULAR = "modular"
    DISTRIBUTIVE = "distributive"
    NOA = "noa"
    NOA_INFERENCE = "noainf"
    NOA_IDENTITY = "noaid"
    NOA_IDENTITY_CONVERSE = "noaidconv"
    OA_TRANSITIVITY = "oatrans"
    OA3_VARIANT = "oa3variant"
    NGO = "ngo"
    NGO_INFERENCE = "ngoinf"
    GODOWSKI_EQUIVALENT = "goeq"
    GODOWSKI_JK = "gojk"
    GODOWSKI_TRANSITIVITY = "gotrans"
    MGE = "mge"
    MGE_DERIVED = "mgederived"
    EN = "en"
    EPRIME = "eprime"
    E1 = "e1"


class SearchMode(StrEnum):
    EXHAUSTIVE = "exhaustive"
    SEARCH = "search"


class VariableOrder(StrEnum):
    MOST_CONSTRAINED = "most-constrained"
    GIVEN = "given"


class VerdictStatus(StrEnum):
    HOLDS = "holds"
    FALSIFIED = "falsified"
    INCONCLUSIVE = "inconclusive"


class Outcome(StrEnum):
    PASS = "pass"
    FAIL = "fail"


class LPStatus(StrEnum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


class Sense(StrEnum):
    LE = "<="
    GE = ">="
    EQ = "="
