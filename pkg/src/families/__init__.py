from src.families.corpus import MGE_CORPUS, resolve_mge
from src.families.fixtures import fixture_ids, fixtures, load_fixture, parse_manifest
from src.families.generators import generate, godowski
from src.families.substitution import (
    SubstitutionResult,
    lemma_substitution,
    substitute,
    substitute_generators,
)
from src.families.wagon_wheel import WagonWheel, wagon_diagram, wagon_wheel

__all__ = [
    "MGE_CORPUS",
    "SubstitutionResult",
    "WagonWheel",
    "fixture_ids",
    "fixtures",
    "generate",
    "godowski",
    "lemma_substitution",
    "load_fixture",
    "parse_manifest",
    "resolve_mge",
    "substitute",
    "substitute_generators",
    "wagon_diagram",
    "wagon_wheel",
]
