"""Inference generators for every named equation family."""

import logging
from collections.abc import Callable

from src.errors import BadParameterError
from src.families.corpus import resolve_mge
from src.models.enums import FamilyName
from src.models.family import FamilyId
from src.terms.ast import (
    Commutes,
    Conclusion,
    Eq,
    Equality,
    Equiv,
    EquivN,
    GodowskiChain,
    Hypothesis,
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
    join_all,
    meet_all,
    term_variables,
)
from src.terms.condensed import mge_to_inference

logger = logging.getLogger(__name__)


def _vars(prefix: str, lo: int, hi: int) -> list[Var]:
    return [Var(f"{prefix}{i}") for i in range(lo, hi + 1)]


def _inference(
    name: str,
    conclusion: Conclusion,
    hypotheses: list[Hypothesis] | tuple[Hypothesis, ...] = (),
    order: list[str] | None = None,
) -> Inference:
    """Variables in ``order`` when given (filtered to those used), else first-use order."""
    used = term_variables(
        *(t for h in hypotheses for t in (h.left, h.right)), conclusion.left, conclusion.right
    )
    if order is not None:
        present = set(used)
        used = [v for v in order if v in present]
    return Inference(
        hypotheses=tuple(hypotheses), conclusion=conclusion, variables=tuple(used), name=name
    )


def _names(terms: list[Var]) -> list[str]:
    return [t.name for t in terms]


# ── Classical laws ───────────────────────────────────────────────────────────


def oml_law() -> Inference:
    """a v (a' ^ (a v b)) = a v b."""
    a, b = Var("a"), Var("b")
    return _inference("oml", Eq(Join(a, Meet(Ortho(a), Join(a, b))), Join(a, b)), order=["a", "b"])


def modular_law() -> Inference:
    a, b, c = Var("a"), Var("b"), Var("c")
    return _inference(
        "modular",
        Eq(Join(a, Meet(b, Join(a, c))), Meet(Join(a, b), Join(a, c))),
        order=["a", "b", "c"],
    )


def distributive_law() -> Inference:
    a, b, c = Var("a"), Var("b"), Var("c")
    return _inference(
        "distributive",
        Eq(Meet(a, Join(b, c)), Join(Meet(a, b), Meet(a, c))),
        order=["a", "b", "c"],
    )


# ── Orthoarguesian family ────────────────────────────────────────────────────


def _oa_equiv(n: int, x: Term, y: Term, aux: list[Var]) -> EquivN:
    return EquivN(n, x, y, tuple(aux))


def noa(n: int) -> Inference:
    """(a1 -> a3) ^ (a1 ==(n) a2) <= a2 -> a3."""
    a = _vars("a", 1, n)
    equiv = _oa_equiv(n, a[0], a[1], a[2:])
    conclusion = Leq(Meet(Sasaki(a[0], a[2]), equiv), Sasaki(a[1], a[2]))
    return _inference(f"noa:{n}", conclusion, order=_names(a))


def noa_inference(n: int) -> Inference:
    """Orthogonality form over a0..a(n-2), b0..b(n-2).

    The right side starts from b0 v (a0 ^ (a1 v X)) with X = (a0 v a1) ^ (b0 v b1);
    each further index t rewrites every (ai v aj) ^ (bi v bj) as itself met with
    the join of the same pattern over (i, t) and (j, t).
    """
    top = n - 2
    a = _vars("a", 0, top)
    b = _vars("b", 0, top)

    def pair(i: int, j: int) -> Term:
        return Meet(Join(a[i], a[j]), Join(b[i], b[j]))

    memo: dict[tuple[int, int, int], Term] = {}

    def grown(i: int, j: int, t: int) -> Term:
        if t > top:
            return pair(i, j)
        key = (i, j, t)
        if key not in memo:
            memo[key] = Meet(grown(i, j, t + 1), Join(grown(i, t, t + 1), grown(j, t, t + 1)))
        return memo[key]

    hypotheses = [Orthogonal(a[i], b[i]) for i in range(top + 1)]
    lhs = meet_all(Join(a[i], b[i]) for i in range(top + 1))
    rhs = Join(b[0], Meet(a[0], Join(a[1], grown(0, 1, 2))))
    order = [v for i in range(top + 1) for v in (a[i].name, b[i].name)]
    return _inference(f"noainf:{n}", Leq(lhs, rhs), hypotheses, order)


def noa_identity(n: int) -> Inference:
    """a1 ==(n) a2 = 1  =>  a1 -> an = a2 -> an."""
    a = _vars("a", 1, n)
    hyp = Equality(_oa_equiv(n, a[0], a[1], a[2:]), One())
    conclusion = Eq(Sasaki(a[0], a[-1]), Sasaki(a[1], a[-1]))
    return _inference(f"noaid:{n}", conclusion, [hyp], _names(a))


def noa_identity_converse(n: int) -> Inference:
    """a1 -> an = a2 -> an  =>  a1 ==(n) a2 = 1."""
    a = _vars("a", 1, n)
    hyp = Equality(Sasaki(a[0], a[-1]), Sasaki(a[1], a[-1]))
    conclusion = Eq(_oa_equiv(n, a[0], a[1], a[2:]), One())
    return _inference(f"noaidconv:{n}", conclusion, [hyp], _names(a))


def oa_transitivity(n: int) -> Inference:
    """Chained ==(n) = 1 hypotheses over shared auxiliaries a3..an."""
    aux = _vars("a", 3, n)
    a1, a2, b1, b2, c1, c2 = (Var(s) for s in ("a1", "a2", "b1", "b2", "c1", "c2"))
    hypotheses: list[Hypothesis] = [
        Equality(a2, b1),
        Equality(b2, c1),
        Equality(c2, a1),
        Equality(_oa_equiv(n, a1, a2, aux), One()),
        Equality(_oa_equiv(n, b1, b2, aux), One()),
    ]
    conclusion = Eq(_oa_equiv(n, c1, c2, aux), One())
    order = ["a1", "a2", "b1", "b2", "c1", "c2", *_names(aux)]
    return _inference(f"oatrans:{n}", conclusion, hypotheses, order)


def oa3_variant(letter: str) -> Inference:
    a1, a2, a3 = _vars("a", 1, 3)
    equiv = EquivN(3, a1, a2, (a3,))
    left = Meet(Sasaki(a1, a3), equiv)
    right = Sasaki(a2, a3)
    right_met = Meet(right, equiv)
    negated = Meet(Ortho(Sasaki(Ortho(a1), a3)), equiv)
    capped = Meet(Meet(a3, Sasaki(a1, a3)), equiv)
    conclusions: dict[str, Conclusion] = {
        "a": Commutes(left, right),
        "b": Commutes(left, right_met),
        "c": Leq(negated, right),
        "d": Commutes(negated, right),
        "e": Commutes(negated, right_met),
        "f": Leq(capped, right),
        "g": Commutes(capped, right),
        "h": Commutes(capped, right_met),
        "i": Eq(Sasaki(left, a3), Sasaki(right_met, a3)),
        "j": Commutes(Sasaki(left, a3), Sasaki(right_met, a3)),
    }
    if letter not in conclusions:
        raise BadParameterError(f"unknown 3OA variant {letter!r}")
    return _inference(f"oa3variant:{letter}", conclusions[letter], order=["a1", "a2", "a3"])


# ── Godowski family ──────────────────────────────────────────────────────────


def godowski(items: list[Term]) -> Term:
    """Godowski identity over ``items``; one item gives 1, two give the biconditional."""
    if len(items) == 1:
        return One()
    if len(items) == 2:
        x, y = items
        return Meet(Sasaki(x, y), Sasaki(y, x))
    return GodowskiChain(tuple(items))


def _span(a: list[Var], i: int, j: int) -> list[Term]:
    """a_i .. a_j (1-based), descending when i > j."""
    if i <= j:
        return list(a[i - 1 : j])
    return list(reversed(a[j - 1 : i]))


def ngo(n: int) -> Inference:
    a = _vars("a", 1, n)
    conclusion = Eq(GodowskiChain(tuple(a)), GodowskiChain(tuple(reversed(a))))
    return _inference(f"ngo:{n}", conclusion, order=_names(a))


def ngo_inference(n: int) -> Inference:
    """a1 _|_ b1 _|_ a2 _|_ ... _|_ bn _|_ a1  =>  meet of (ai v bi) <= b1 v a2."""
    a = _vars("a", 1, n)
    b = _vars("b", 1, n)
    hypotheses: list[Hypothesis] = []
    for i in range(n):
        hypotheses.append(Orthogonal(a[i], b[i]))
        hypotheses.append(Orthogonal(b[i], a[(i + 1) % n]))
    lhs = meet_all(Join(a[i], b[i]) for i in range(n))
    order = [v for i in range(n) for v in (a[i].name, b[i].name)]
    return _inference(f"ngoinf:{n}", Leq(lhs, Join(b[0], a[1])), hypotheses, order)


def godowski_equivalent(form: str, n: int) -> Inference:
    a = _vars("a", 1, n)
    chain = GodowskiChain(tuple(a))
    match form:
        case "c":
            steps = meet_all(Equiv(a[i], a[i + 1]) for i in range(n - 1))
            conclusion: Conclusion = Eq(chain, steps)
        case "d":
            conclusion = Leq(chain, Sasaki(a[0], a[-1]))
        case "e":
            conclusion = Eq(Meet(chain, join_all(a)), meet_all(a))
        case _:
            raise BadParameterError(f"unknown Godowski equivalent {form!r}")
    return _inference(f"goeq:{form}:{n}", conclusion, order=_names(a))


def godowski_jk(n: int, j: int, k: int) -> Inference:
    a = _vars("a", 1, n)
    conclusion = Leq(GodowskiChain(tuple(a)), Sasaki(a[j - 1], a[k - 1]))
    return _inference(f"gojk:{n}:{j}:{k}", conclusion, order=_names(a))


def godowski_transitivity(i: int, j: int) -> Inference:
    """(a1 =g ai) ^ (ai =g aj) <= a1 =g aj with n = max(i, j, 3)."""
    n = max(i, j, 3)
    a = _vars("a", 1, n)
    left = Meet(godowski(_span(a, 1, i)), godowski(_span(a, i, j)))
    conclusion = Leq(left, godowski(_span(a, 1, j)))
    return _inference(f"gotrans:{i}:{j}", conclusion, order=_names(a))


# ── Mayet-Godowski ───────────────────────────────────────────────────────────


def mge(text: str) -> Inference:
    return mge_to_inference(resolve_mge(text), name=f"mge:{text.strip()}")


def mge_derived(which: str) -> Inference:
    """Short equations obtained from condensed MGEs by generator substitution."""
    a, b, c, d = (Var(s) for s in "abcd")
    match which:
        case "newst1d":
            left = meet_all([Sasaki(Sasaki(a, b), Sasaki(c, b)), Sasaki(a, c), Sasaki(b, a)])
            conclusion = Leq(left, Sasaki(c, a))
        case "eq45":
            left = meet_all(
                [Sasaki(d, Sasaki(a, b)), Sasaki(Sasaki(a, c), d), Sasaki(b, c), Sasaki(c, a)]
            )
            conclusion = Leq(left, Sasaki(b, a))
        case "eq46":
            left = meet_all(
                [
                    Sasaki(d, Meet(c, Sasaki(a, b))),
                    Sasaki(Sasaki(b, a), d),
                    Sasaki(c, a),
                    Sasaki(b, d),
                ]
            )
            conclusion = Leq(left, Sasaki(a, c))
        case "eq47":
            left = meet_all(
                [
                    Sasaki(Sasaki(d, a), Ortho(Sasaki(b, c))),
                    Sasaki(Sasaki(c, d), Ortho(Sasaki(a, b))),
                    Sasaki(Ortho(Sasaki(b, a)), Sasaki(d, c)),
                    Sasaki(Ortho(Sasaki(a, d)), Sasaki(c, b)),
                ]
            )
            conclusion = Leq(left, Sasaki(Sasaki(d, c), Ortho(Sasaki(b, a))))
        case _:
            raise BadParameterError(f"unknown derived MGE {which!r}")
    return _inference(f"mgederived:{which}", conclusion, order=list("abcd"))


# ── Vector-state equations ───────────────────────────────────────────────────


def _omega(n: int) -> tuple[list[Var], list[Var], Var, list[Hypothesis]]:
    a = _vars("a", 1, n)
    b = _vars("b", 1, n)
    v = Var("v")
    hypotheses: list[Hypothesis] = [Orthogonal(v, bi) for bi in b]
    hypotheses += [Orthogonal(bi, ai) for ai, bi in zip(a, b, strict=True)]
    hypotheses += [Orthogonal(a[i], a[j]) for i in range(n) for j in range(i + 1, n)]
    return a, b, v, hypotheses


def _aqb(a: list[Var], b: list[Var]) -> tuple[Term, Term, Term]:
    q = meet_all(Join(ai, bi) for ai, bi in zip(a, b, strict=True))
    return join_all(a), q, join_all(b)


def e_n(n: int) -> Inference:
    a, b, v, omega = _omega(n)
    big_a, q, big_b = _aqb(a, b)
    order = ["v", *_names(a), *_names(b)]
    return _inference(f"en:{n}", Eq(Meet(big_a, q), big_b), omega, order)


def e_prime(n: int) -> Inference:
    a, b, v, omega = _omega(n)
    big_a, q, big_b = _aqb(a, b)
    r = Var("r")
    hypotheses = [*omega, Orthogonal(r, big_a)]
    left = meet_all([q, Sasaki(q, Ortho(r)), Join(big_a, r)])
    order = ["v", "r", *_names(a), *_names(b)]
    return _inference(f"eprime:{n}", Leq(left, big_b), hypotheses, order)


def e_one(n: int) -> Inference:
    a, b, v, omega = _omega(n)
    c = _vars("c", 1, n)
    u = Var("u")
    hypotheses = list(omega)
    hypotheses += [Orthogonal(bi, ci) for bi, ci in zip(b, c, strict=True)]
    hypotheses += [Orthogonal(ai, ci) for ai, ci in zip(a, c, strict=True)]
    hypotheses += [Orthogonal(u, ci) for ci in c]
    blocks = [join_all(t) for t in zip(a, b, c, strict=True)]
    left = meet_all([u, join_all(a), *blocks])
    order = ["u", "v", *_names(a), *_names(b), *_names(c)]
    return _inference(f"e1:{n}", Leq(left, Ortho(v)), hypotheses, order)


_SIZED: dict[FamilyName, Callable[[int], Inference]] = {
    FamilyName.NOA: noa,
    FamilyName.NOA_INFERENCE: noa_inference,
    FamilyName.NOA_IDENTITY: noa_identity,
    FamilyName.NOA_IDENTITY_CONVERSE: noa_identity_converse,
    FamilyName.OA_TRANSITIVITY: oa_transitivity,
    FamilyName.NGO: ngo,
    FamilyName.NGO_INFERENCE: ngo_inference,
    FamilyName.EN: e_n,
    FamilyName.EPRIME: e_prime,
    FamilyName.E1: e_one,
}


def generate(family: FamilyId | str) -> Inference:
    """Build the inference named by ``family`` (a FamilyId or its text key)."""
    fid = family if isinstance(family, FamilyId) else FamilyId.parse(family)
    logger.debug("Generating %s", fid.key)
    match fid.name:
        case FamilyName.OML:
            return oml_law()
        case FamilyName.MODULAR:
            return modular_law()
        case FamilyName.DISTRIBUTIVE:
            return distributive_law()
        case FamilyName.OA3_VARIANT:
            return oa3_variant(fid.variant or "")
        case FamilyName.GODOWSKI_EQUIVALENT:
            return godowski_equivalent(fid.variant or "", fid.n or 3)
        case FamilyName.GODOWSKI_JK:
            return godowski_jk(fid.n, fid.j, fid.k)  # type: ignore[arg-type]
        case FamilyName.GODOWSKI_TRANSITIVITY:
            return godowski_transitivity(fid.j, fid.k)  # type: ignore[arg-type]
        case FamilyName.MGE:
            return mge(fid.variant or "")
        case FamilyName.MGE_DERIVED:
            return mge_derived(fid.variant or "")
    return _SIZED[fid.name](fid.n)  # type: ignore[arg-type]
