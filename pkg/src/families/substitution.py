"""Generator substitution and variable identification on inferences."""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from src.checker.engine import check
from src.errors import BadParameterError
from src.families.fixtures import load_fixture
from src.lattice import Lattice, build, mo2
from src.models.verdict import Strategy
from src.terms.ast import (
    Conclusion,
    Eq,
    Equiv,
    EquivN,
    GodowskiChain,
    Hypothesis,
    Inference,
    Join,
    Leq,
    Meet,
    Ortho,
    Orthogonal,
    Sasaki,
    Term,
    Var,
    term_variables,
)

logger = logging.getLogger(__name__)


def substitute(term: Term, mapping: Mapping[str, Term]) -> Term:
    """Simultaneous replacement of variables; shared subterms stay shared."""
    memo: dict[int, Term] = {}
    keep: list[Term] = []

    def go(t: Term) -> Term:
        cached = memo.get(id(t))
        if cached is not None:
            return cached
        match t:
            case Var(name):
                result = mapping.get(name, t)
            case Ortho(arg):
                result = Ortho(go(arg))
            case Meet(l, r) | Join(l, r) | Sasaki(l, r) | Equiv(l, r):
                result = type(t)(go(l), go(r))
            case EquivN(n, l, r, aux):
                result = EquivN(n, go(l), go(r), tuple(go(x) for x in aux))
            case GodowskiChain(items):
                result = GodowskiChain(tuple(go(x) for x in items))
            case _:
                result = t
        memo[id(t)] = result
        keep.append(t)
        return result

    return go(term)


def _meet_conjuncts(term: Term) -> list[Term]:
    if isinstance(term, Meet):
        return _meet_conjuncts(term.left) + _meet_conjuncts(term.right)
    return [term]


@dataclass(frozen=True)
class SubstitutionResult:
    """Substituted inference plus the fate of each substituted hypothesis.

    ``discharged`` hypotheses held under every assignment of every check
    lattice and were dropped; ``retained`` ones did not and were kept.
    """

    inference: Inference
    discharged: tuple[Hypothesis, ...]
    retained: tuple[Hypothesis, ...]


def _hypothesis_holds_everywhere(
    hyp: Hypothesis, variables: Sequence[str], lattices: Sequence[Lattice]
) -> bool:
    conclusion: Conclusion
    if isinstance(hyp, Orthogonal):
        conclusion = Leq(hyp.left, Ortho(hyp.right))
    else:
        conclusion = Eq(hyp.left, hyp.right)
    used = set(term_variables(hyp.left, hyp.right))
    law = Inference(
        hypotheses=(), conclusion=conclusion, variables=tuple(v for v in variables if v in used)
    )
    return all(check(lat, law, Strategy()).holds for lat in lattices)


def default_check_lattices() -> list[Lattice]:
    """Orthomodular lattices used to discharge substituted hypotheses."""
    return [mo2(), build(load_fixture("13-7-OMLp-oa3f").diagram, name="13-7-OMLp-oa3f")]


def substitute_generators(
    base: Inference,
    subs: Mapping[str, Term],
    *,
    keep_rhs_conjunct: int | None = None,
    lattices: Sequence[Lattice] | None = None,
) -> SubstitutionResult:
    """Apply ``subs`` simultaneously to every variable of ``base``.

    Hypotheses turned into OML theorems are discharged after an exhaustive
    check over ``lattices`` (default: MO2 and the 13-atom fixture). With
    ``keep_rhs_conjunct`` an equality conclusion ``l = r1 ^ ... ^ rk`` becomes
    ``l <= r_i`` for the given 0-based index.
    """
    unknown = [v for v in subs if v not in base.variables]
    if unknown:
        raise BadParameterError(f"substitution names unknown variables {unknown}")
    if lattices is None:
        lattices = default_check_lattices()

    concl = base.conclusion
    left, right = substitute(concl.left, subs), substitute(concl.right, subs)
    conclusion: Conclusion
    if keep_rhs_conjunct is not None:
        if not isinstance(concl, Eq):
            raise BadParameterError("keep_rhs_conjunct needs an equality conclusion")
        parts = _meet_conjuncts(right)
        if not 0 <= keep_rhs_conjunct < len(parts):
            raise BadParameterError(
                f"conjunct {keep_rhs_conjunct} out of range for {len(parts)} conjuncts"
            )
        conclusion = Leq(left, parts[keep_rhs_conjunct])
    else:
        conclusion = type(concl)(left, right)

    new_variables: dict[str, None] = {}
    for name in base.variables:
        replacement = subs.get(name, Var(name))
        for v in term_variables(replacement):
            new_variables.setdefault(v)

    discharged: list[Hypothesis] = []
    retained: list[Hypothesis] = []
    for hyp in base.hypotheses:
        image = type(hyp)(substitute(hyp.left, subs), substitute(hyp.right, subs))
        if _hypothesis_holds_everywhere(image, list(new_variables), lattices):
            discharged.append(image)
        else:
            retained.append(image)
    logger.info(
        "Substitution into %s: %d hypotheses discharged, %d retained",
        base.name or "inference",
        len(discharged),
        len(retained),
    )
    used = set(
        term_variables(
            *(t for h in retained for t in (h.left, h.right)), conclusion.left, conclusion.right
        )
    )
    inference = Inference(
        hypotheses=tuple(retained),
        conclusion=conclusion,
        variables=tuple(v for v in new_variables if v in used),
        name=f"{base.name} [substituted]" if base.name else "",
    )
    return SubstitutionResult(
        inference=inference, discharged=tuple(discharged), retained=tuple(retained)
    )


def lemma_substitution(inference: Inference, target: str, source: str) -> Inference:
    """Identify ``target`` with ``source`` (e.g. put a1 for a2) and drop ``target``."""
    for name in (target, source):
        if name not in inference.variables:
            raise BadParameterError(f"{name!r} is not a variable of the inference")
    mapping = {target: Var(source)}
    merged = inference.map_terms(lambda t: substitute(t, mapping))
    return Inference(
        hypotheses=merged.hypotheses,
        conclusion=merged.conclusion,
        variables=tuple(v for v in inference.variables if v != target),
        name=f"{inference.name} [{target}:={source}]" if inference.name else "",
    )
