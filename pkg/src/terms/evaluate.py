"""Term evaluation over a lattice.

Terms are compiled into a hash-consed straight-line program: structurally
equal subterms become one node, so the exponentially redundant expansions of
==(n) and Godowski chains are evaluated once per assignment.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from src.errors import UnboundVariableError
from src.lattice.core import Lattice
from src.terms.ast import (
    Equiv,
    EquivN,
    GodowskiChain,
    Join,
    Meet,
    One,
    Ortho,
    Sasaki,
    Term,
    Var,
    Zero,
    children,
)

OP_VAR = 0
OP_ZERO = 1
OP_ONE = 2
OP_ORTHO = 3
OP_MEET = 4
OP_JOIN = 5
OP_SASAKI = 6
OP_EQUIV = 7


@dataclass(frozen=True, slots=True)
class Program:
    """Topologically ordered nodes ``(op, a, b)``; for OP_VAR ``a`` is the variable slot."""

    nodes: tuple[tuple[int, int, int], ...]
    variables: tuple[str, ...]

    def run(self, lat: Lattice, values: Sequence[int]) -> list[int]:
        out = [0] * len(self.nodes)
        ortho, meet, join = lat.ortho_table, lat.meet_table, lat.join_table
        sasaki = lat.sasaki_table if any(n[0] == OP_SASAKI for n in self.nodes) else None
        equiv = lat.equiv_table if any(n[0] == OP_EQUIV for n in self.nodes) else None
        for i, (op, a, b) in enumerate(self.nodes):
            if op == OP_VAR:
                out[i] = values[a]
            elif op == OP_ZERO:
                out[i] = 0
            elif op == OP_ONE:
                out[i] = lat.one
            elif op == OP_ORTHO:
                out[i] = ortho[out[a]]
            elif op == OP_MEET:
                out[i] = meet[out[a]][out[b]]
            elif op == OP_JOIN:
                out[i] = join[out[a]][out[b]]
            elif op == OP_SASAKI:
                out[i] = sasaki[out[a]][out[b]]  # type: ignore[index]
            else:
                out[i] = equiv[out[a]][out[b]]  # type: ignore[index]
        return out


class _Compiler:
    def __init__(self, variables: Sequence[str]) -> None:
        self.slots = {name: i for i, name in enumerate(variables)}
        self.variables = tuple(variables)
        self.nodes: list[tuple[int, int, int]] = []
        self.interned: dict[tuple[int, int, int], int] = {}
        self.by_object: dict[int, int] = {}
        self._keep: list[Term] = []

    def node(self, op: int, a: int = -1, b: int = -1) -> int:
        if op in (OP_MEET, OP_JOIN, OP_EQUIV) and a > b:
            a, b = b, a
        key = (op, a, b)
        found = self.interned.get(key)
        if found is None:
            found = len(self.nodes)
            self.nodes.append(key)
            self.interned[key] = found
        return found

    def sasaki(self, x: int, y: int) -> int:
        return self.node(OP_SASAKI, x, y)

    def equiv_n(self, n: int, x: int, y: int, aux: tuple[int, ...]) -> int:
        if n == 3:
            a3 = aux[0]
            positive = self.node(OP_MEET, self.sasaki(x, a3), self.sasaki(y, a3))
            nx, ny = self.node(OP_ORTHO, x), self.node(OP_ORTHO, y)
            negative = self.node(OP_MEET, self.sasaki(nx, a3), self.sasaki(ny, a3))
            return self.node(OP_JOIN, positive, negative)
        head, an = aux[:-1], aux[-1]
        both = self.node(
            OP_MEET, self.equiv_n(n - 1, x, an, head), self.equiv_n(n - 1, y, an, head)
        )
        return self.node(OP_JOIN, self.equiv_n(n - 1, x, y, head), both)

    def compile(self, term: Term) -> int:
        cached = self.by_object.get(id(term))
        if cached is not None:
            return cached
        match term:
            case Var(name):
                if name not in self.slots:
                    raise UnboundVariableError(name)
                result = self.node(OP_VAR, self.slots[name])
            case Zero():
                result = self.node(OP_ZERO)
            case One():
                result = self.node(OP_ONE)
            case Ortho(arg):
                result = self.node(OP_ORTHO, self.compile(arg))
            case Meet(l, r):
                result = self.node(OP_MEET, self.compile(l), self.compile(r))
            case Join(l, r):
                result = self.node(OP_JOIN, self.compile(l), self.compile(r))
            case Sasaki(l, r):
                result = self.sasaki(self.compile(l), self.compile(r))
            case Equiv(l, r):
                result = self.node(OP_EQUIV, self.compile(l), self.compile(r))
            case EquivN(n, l, r, aux):
                ids = tuple(self.compile(a) for a in aux)
                result = self.equiv_n(n, self.compile(l), self.compile(r), ids)
            case GodowskiChain(items):
                ids = [self.compile(t) for t in items]
                arrows = [self.sasaki(ids[i], ids[(i + 1) % len(ids)]) for i in range(len(ids))]
                result = arrows[0]
                for arrow in arrows[1:]:
                    result = self.node(OP_MEET, result, arrow)
            case _:
                raise TypeError(f"not a term: {term!r}")
        self.by_object[id(term)] = result
        self._keep.append(term)
        return result

    def program(self) -> Program:
        return Program(nodes=tuple(self.nodes), variables=self.variables)


def compile_terms(
    terms: Sequence[Term],
    variables: Sequence[str],
    aliases: Mapping[str, str] | None = None,
) -> tuple[Program, list[int]]:
    """Compile ``terms`` into one shared program; returns it with the root node of each term.

    ``aliases`` maps extra variable names onto a name in ``variables`` sharing its slot.
    """
    compiler = _Compiler(variables)
    for name, target in (aliases or {}).items():
        if target not in compiler.slots:
            raise UnboundVariableError(target)
        compiler.slots[name] = compiler.slots[target]
    roots = [compiler.compile(t) for t in terms]
    return compiler.program(), roots


def evaluate(term: Term, lat: Lattice, assignment: Mapping[str, int]) -> int:
    """Value of ``term`` in ``lat`` under ``assignment`` (variable name -> element id)."""
    names = list(assignment)
    program, (root,) = compile_terms([term], names)
    values = [lat.check_index(assignment[n]) for n in names]
    return program.run(lat, values)[root]


# ── Rewriting to elementary connectives ──────────────────────────────────────


def expand(term: Term) -> Term:
    """Rewrite every derived connective into ' ^ v; the result is a tree that shares objects."""
    memo: dict[int, Term] = {}
    keep: list[Term] = []

    def sasaki(x: Term, y: Term) -> Term:
        return Join(Ortho(x), Meet(x, y))

    def equiv_n(n: int, x: Term, y: Term, aux: tuple[Term, ...]) -> Term:
        if n == 3:
            a3 = aux[0]
            return Join(
                Meet(sasaki(x, a3), sasaki(y, a3)),
                Meet(sasaki(Ortho(x), a3), sasaki(Ortho(y), a3)),
            )
        head, an = aux[:-1], aux[-1]
        return Join(
            equiv_n(n - 1, x, y, head),
            Meet(equiv_n(n - 1, x, an, head), equiv_n(n - 1, y, an, head)),
        )

    def go(t: Term) -> Term:
        cached = memo.get(id(t))
        if cached is not None:
            return cached
        match t:
            case Var() | Zero() | One():
                result = t
            case Ortho(arg):
                result = Ortho(go(arg))
            case Meet(l, r):
                result = Meet(go(l), go(r))
            case Join(l, r):
                result = Join(go(l), go(r))
            case Sasaki(l, r):
                result = sasaki(go(l), go(r))
            case Equiv(l, r):
                x, y = go(l), go(r)
                result = Join(Meet(x, y), Meet(Ortho(x), Ortho(y)))
            case EquivN(n, l, r, aux):
                result = equiv_n(n, go(l), go(r), tuple(go(a) for a in aux))
            case GodowskiChain(items):
                xs = [go(i) for i in items]
                arrows = [sasaki(xs[i], xs[(i + 1) % len(xs)]) for i in range(len(xs))]
                result = arrows[0]
                for arrow in arrows[1:]:
                    result = Meet(result, arrow)
            case _:
                raise TypeError(f"not a term: {t!r}")
        memo[id(t)] = result
        keep.append(t)
        return result

    return go(term)


def unfold(term: Term) -> Term:
    """Rewrite ==(n) and Godowski chains into arrows, meets and joins (arrows kept)."""
    memo: dict[int, Term] = {}
    keep: list[Term] = []

    def equiv_n(n: int, x: Term, y: Term, aux: tuple[Term, ...]) -> Term:
        if n == 3:
            a3 = aux[0]
            return Join(
                Meet(Sasaki(x, a3), Sasaki(y, a3)),
                Meet(Sasaki(Ortho(x), a3), Sasaki(Ortho(y), a3)),
            )
        head, an = aux[:-1], aux[-1]
        return Join(
            equiv_n(n - 1, x, y, head),
            Meet(equiv_n(n - 1, x, an, head), equiv_n(n - 1, y, an, head)),
        )

    def go(t: Term) -> Term:
        cached = memo.get(id(t))
        if cached is not None:
            return cached
        match t:
            case EquivN(n, l, r, aux):
                result = equiv_n(n, go(l), go(r), tuple(go(a) for a in aux))
            case GodowskiChain(items):
                xs = [go(i) for i in items]
                arrows = [Sasaki(xs[i], xs[(i + 1) % len(xs)]) for i in range(len(xs))]
                result = arrows[0]
                for arrow in arrows[1:]:
                    result = Meet(result, arrow)
            case Ortho(arg):
                result = Ortho(go(arg))
            case Meet(l, r) | Join(l, r) | Sasaki(l, r) | Equiv(l, r):
                result = type(t)(go(l), go(r))
            case _:
                result = t
        memo[id(t)] = result
        keep.append(t)
        return result

    return go(term)


def occurrences(term: Term) -> int:
    """Number of variable occurrences when ``term`` is written out as a tree."""
    memo: dict[int, int] = {}

    def count(t: Term) -> int:
        cached = memo.get(id(t))
        if cached is not None:
            return cached
        result = 1 if isinstance(t, Var) else sum(count(c) for c in children(t))
        memo[id(t)] = result
        return result

    return count(term)
