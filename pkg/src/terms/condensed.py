"""Condensed state equations: join by juxtaposition, meet of sides by '+'.

``ab+cd=ac+bd`` stands for the inference with hypotheses a ⊥ b and c ⊥ d
(and a ⊥ c, b ⊥ d) whose conclusion is (a v b) ^ (c v d) = (a v c) ^ (b v d).
"""

import string

from src.errors import CondensedSyntaxError, RepeatedVariableInTermError, UnbalancedEquationError
from src.models.condensed import CondensedStateEquation
from src.terms.ast import Eq, Inference, Orthogonal, Var, join_all, meet_all

_VARIABLES = set(string.ascii_lowercase)


def _parse_side(text: str, side: str) -> tuple[tuple[str, ...], ...]:
    if not text:
        raise CondensedSyntaxError(f"empty {side} side")
    terms = []
    for chunk in text.split("+"):
        if not chunk:
            raise CondensedSyntaxError(f"empty term on the {side} side")
        bad = [c for c in chunk if c not in _VARIABLES]
        if bad:
            raise CondensedSyntaxError(f"unexpected character {bad[0]!r} in term {chunk!r}")
        if len(set(chunk)) != len(chunk):
            repeated = next(c for c in chunk if chunk.count(c) > 1)
            raise RepeatedVariableInTermError(repeated, chunk)
        terms.append(tuple(chunk))
    return tuple(terms)


def parse_condensed(text: str) -> CondensedStateEquation:
    """Parse ``text``; whitespace is ignored and variables are the letters a-z."""
    compact = "".join(text.split())
    if compact.count("=") != 1:
        raise CondensedSyntaxError(f"expected exactly one '=' in {text.strip()!r}")
    left, right = compact.split("=")
    equation = CondensedStateEquation(
        lhs=_parse_side(left, "left"), rhs=_parse_side(right, "right")
    )
    if not equation.balanced:
        counts = {v: c for v, c in equation.counts().items() if c[0] != c[1]}
        raise UnbalancedEquationError(counts)
    return equation


def serialize_condensed(equation: CondensedStateEquation) -> str:
    def side(terms: tuple[tuple[str, ...], ...]) -> str:
        return "+".join("".join(t) for t in terms)

    return f"{side(equation.lhs)}={side(equation.rhs)}"


def mge_to_inference(equation: CondensedStateEquation, name: str = "") -> Inference:
    """Orthogonality hypotheses for every within-term pair, conclusion as meet of joins."""
    hypotheses: list[Orthogonal] = []
    seen: set[frozenset[str]] = set()
    for term in (*equation.lhs, *equation.rhs):
        for i, x in enumerate(term):
            for y in term[i + 1 :]:
                pair = frozenset((x, y))
                if pair not in seen:
                    seen.add(pair)
                    hypotheses.append(Orthogonal(Var(x), Var(y)))

    def side(terms: tuple[tuple[str, ...], ...]):
        return meet_all(join_all(Var(v) for v in term) for term in terms)

    return Inference(
        hypotheses=tuple(hypotheses),
        conclusion=Eq(side(equation.lhs), side(equation.rhs)),
        variables=tuple(equation.variables),
        name=name or serialize_condensed(equation),
    )
