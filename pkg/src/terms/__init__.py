from src.terms.ast import (
    Commutes,
    Eq,
    Equality,
    Equiv,
    EquivN,
    GodowskiChain,
    Inference,
    Join,
    Leq,
    Meet,
    One,
    Ortho,
    Orthogonal,
    Sasaki,
    Term,
    Var,
    Zero,
    join_all,
    meet_all,
    term_variables,
    variables,
)
from src.terms.condensed import mge_to_inference, parse_condensed, serialize_condensed
from src.terms.evaluate import compile_terms, evaluate, expand, occurrences, unfold
from src.terms.printer import format_inference, format_term

__all__ = [
    "Commutes",
    "Eq",
    "Equality",
    "Equiv",
    "EquivN",
    "GodowskiChain",
    "Inference",
    "Join",
    "Leq",
    "Meet",
    "One",
    "Ortho",
    "Orthogonal",
    "Sasaki",
    "Term",
    "Var",
    "Zero",
    "compile_terms",
    "evaluate",
    "expand",
    "format_inference",
    "format_term",
    "join_all",
    "meet_all",
    "mge_to_inference",
    "occurrences",
    "parse_condensed",
    "serialize_condensed",
    "term_variables",
    "unfold",
]
