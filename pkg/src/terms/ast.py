"""Lattice-polynomial terms and inferences.

Terms are frozen dataclasses so they hash and compare structurally; large
terms share subterm objects, which :mod:`src.terms.evaluate` exploits.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from functools import reduce

from src.errors import BadParameterError


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class Zero:
    pass


@dataclass(frozen=True, slots=True)
class One:
    pass


@dataclass(frozen=True, slots=True)
class Ortho:
    arg: Term


@dataclass(frozen=True, slots=True)
class Meet:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Join:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Sasaki:
    """x -> y = x' v (x ^ y)."""

    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Equiv:
    """x == y = (x ^ y) v (x' ^ y')."""

    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class EquivN:
    """The n-variable equivalence x ==(n) y over auxiliary terms a3..an."""

    n: int
    left: Term
    right: Term
    aux: tuple[Term, ...]

    def __post_init__(self) -> None:
        if self.n < 3:
            raise BadParameterError(f"==(n) needs n >= 3, got {self.n}")
        if len(self.aux) != self.n - 2:
            raise BadParameterError(f"==({self.n}) needs {self.n - 2} auxiliary terms")


@dataclass(frozen=True, slots=True)
class GodowskiChain:
    """(a1 -> a2) ^ (a2 -> a3) ^ ... ^ (an -> a1)."""

    items: tuple[Term, ...]

    def __post_init__(self) -> None:
        if len(self.items) < 3:
            raise BadParameterError("a Godowski chain needs at least three terms")


Term = Var | Zero | One | Ortho | Meet | Join | Sasaki | Equiv | EquivN | GodowskiChain


# ── Hypotheses and conclusions ───────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class Orthogonal:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Equality:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Leq:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Commutes:
    """left C right, i.e. left = (left v right) ^ (left v right')."""

    left: Term
    right: Term


Hypothesis = Orthogonal | Equality
Conclusion = Leq | Eq | Commutes


@dataclass(frozen=True, slots=True)
class Inference:
    hypotheses: tuple[Hypothesis, ...]
    conclusion: Conclusion
    variables: tuple[str, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        used: dict[str, None] = {}
        for hyp in self.hypotheses:
            for name in term_variables(hyp.left, hyp.right):
                used.setdefault(name)
        for name in term_variables(self.conclusion.left, self.conclusion.right):
            used.setdefault(name)
        missing = [v for v in used if v not in self.variables]
        if missing:
            raise BadParameterError(f"variables {missing} missing from the variable list")
        if len(set(self.variables)) != len(self.variables):
            raise BadParameterError("duplicate variable names")

    def map_terms(self, rewrite: Callable[[Term], Term]) -> Inference:
        """Apply ``rewrite`` to both sides of every hypothesis and of the conclusion."""
        hypotheses = tuple(type(h)(rewrite(h.left), rewrite(h.right)) for h in self.hypotheses)
        c = self.conclusion
        conclusion = type(c)(rewrite(c.left), rewrite(c.right))
        return Inference(hypotheses, conclusion, self.variables, name=self.name)


# ── Helpers ──────────────────────────────────────────────────────────────────


def var(name: str) -> Var:
    return Var(name)


def variables(*names: str) -> tuple[Var, ...]:
    return tuple(Var(n) for n in names)


def meet_all(terms: Iterable[Term]) -> Term:
    items = list(terms)
    if not items:
        return One()
    return reduce(Meet, items)


def join_all(terms: Iterable[Term]) -> Term:
    items = list(terms)
    if not items:
        return Zero()
    return reduce(Join, items)


def children(term: Term) -> tuple[Term, ...]:
    match term:
        case Var() | Zero() | One():
            return ()
        case Ortho(arg):
            return (arg,)
        case Meet(l, r) | Join(l, r) | Sasaki(l, r) | Equiv(l, r):
            return (l, r)
        case EquivN(_, l, r, aux):
            return (l, r, *aux)
        case GodowskiChain(items):
            return items
    raise TypeError(f"not a term: {term!r}")


def iter_subterms(*terms: Term) -> Iterator[Term]:
    """Distinct subterm objects, each visited once (pre-order)."""
    seen: set[int] = set()
    stack = list(reversed(terms))
    while stack:
        t = stack.pop()
        if id(t) in seen:
            continue
        seen.add(id(t))
        yield t
        stack.extend(reversed(children(t)))


def term_variables(*terms: Term) -> list[str]:
    """Variable names in first-occurrence order."""
    found: dict[str, None] = {}
    for t in iter_subterms(*terms):
        if isinstance(t, Var):
            found.setdefault(t.name)
    return list(found)
