"""Search plan for deciding an inference over a finite lattice.

The inference is compiled once into a single node program. Variables are
assigned one per depth; every node is evaluated at the first depth where all
of its variables are bound, so a partial assignment costs only the nodes that
became ready at that depth.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

from src.lattice.core import Lattice, bits
from src.models.enums import VariableOrder
from src.terms.ast import (
    Commutes,
    Eq,
    Equality,
    Inference,
    Join,
    Leq,
    Meet,
    Ortho,
    Orthogonal,
    Term,
    Var,
)
from src.terms.evaluate import (
    OP_EQUIV,
    OP_JOIN,
    OP_MEET,
    OP_ONE,
    OP_ORTHO,
    OP_SASAKI,
    OP_VAR,
    OP_ZERO,
    compile_terms,
)

HYP_ORTHOGONAL = 0
HYP_EQUAL = 1


def _meet_chain(term: Term) -> list[Term]:
    if isinstance(term, Meet):
        return _meet_chain(term.left) + _meet_chain(term.right)
    return [term]


class _UnionFind:
    def __init__(self, names: list[str]) -> None:
        self.parent = {n: n for n in names}
        self.rank = {n: i for i, n in enumerate(names)}

    def find(self, name: str) -> str:
        while self.parent[name] != name:
            self.parent[name] = self.parent[self.parent[name]]
            name = self.parent[name]
        return name

    def union(self, x: str, y: str) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        # the earlier variable stays the representative
        if self.rank[ry] < self.rank[rx]:
            rx, ry = ry, rx
        self.parent[ry] = rx


def _aliases(inference: Inference) -> dict[str, str]:
    uf = _UnionFind(list(inference.variables))
    for hyp in inference.hypotheses:
        if isinstance(hyp, Equality) and isinstance(hyp.left, Var) and isinstance(hyp.right, Var):
            uf.union(hyp.left.name, hyp.right.name)
    return {v: uf.find(v) for v in inference.variables}


def _variable_order(
    representatives: list[str], edges: list[tuple[str, str]], how: VariableOrder
) -> list[str]:
    if how == VariableOrder.GIVEN or not edges:
        return list(representatives)
    degree = {v: 0 for v in representatives}
    neighbours: dict[str, set[str]] = {v: set() for v in representatives}
    for x, y in edges:
        degree[x] += 1
        degree[y] += 1
        neighbours[x].add(y)
        neighbours[y].add(x)
    position = {v: i for i, v in enumerate(representatives)}
    chosen: list[str] = []
    remaining = set(representatives)
    while remaining:
        linked = set(chosen)
        best = max(
            remaining,
            key=lambda v: (len(neighbours[v] & linked), degree[v], -position[v]),
        )
        chosen.append(best)
        remaining.remove(best)
    return chosen


@dataclass
class CheckPlan:
    """Everything the depth-first walk needs, indexed by depth."""

    lattice: Lattice
    inference: Inference
    order: list[str]
    aliases: dict[str, str]
    size: int
    # nodes (index, op, a, b) evaluated once before the walk / at each depth
    constant_nodes: list[tuple[int, int, int, int]]
    depth_nodes: list[list[tuple[int, int, int, int]]]
    node_count: int
    # earlier depths whose values must be orthogonal to this depth's value
    orth_links: list[list[int]]
    self_orthogonal: list[bool]
    hyp_at: list[list[tuple[int, int, int]]]
    constant_hyps: list[tuple[int, int, int]]
    kind: str
    lhs_root: int
    rhs_root: int
    rhs_ready: int
    lhs_parts: list[list[int]] = field(default_factory=list)
    rhs_parts: list[list[int]] = field(default_factory=list)
    orth_mask: tuple[int, ...] = ()
    self_mask: int = 0
    atom_mask: int = 0

    @property
    def depth(self) -> int:
        return len(self.order)

    def assignment(self, values: list[int]) -> dict[str, int]:
        """Full assignment over the inference's variables (aliases expanded)."""
        slot = {v: i for i, v in enumerate(self.order)}
        return {v: values[slot[self.aliases[v]]] for v in self.inference.variables}


def build_plan(
    lattice: Lattice, inference: Inference, how: VariableOrder = VariableOrder.MOST_CONSTRAINED
) -> CheckPlan:
    aliases = _aliases(inference)
    representatives = [v for v in inference.variables if aliases[v] == v]

    edges: list[tuple[str, str]] = []
    term_hyps: list[tuple[int, Term, Term]] = []
    for hyp in inference.hypotheses:
        left, right = hyp.left, hyp.right
        if isinstance(hyp, Orthogonal):
            if isinstance(left, Var) and isinstance(right, Var):
                edges.append((aliases[left.name], aliases[right.name]))
            else:
                term_hyps.append((HYP_ORTHOGONAL, left, right))
        elif not (isinstance(left, Var) and isinstance(right, Var)):
            term_hyps.append((HYP_EQUAL, left, right))

    order = _variable_order(representatives, edges, how)
    depth_of = {v: i for i, v in enumerate(order)}
    alias_map = {v: r for v, r in aliases.items() if v != r}

    concl = inference.conclusion
    lhs, rhs = concl.left, concl.right
    kind = "leq"
    if isinstance(concl, Eq):
        kind = "eq"
    elif isinstance(concl, Commutes):
        kind = "eq"
        rhs = Meet(Join(lhs, rhs), Join(lhs, Ortho(rhs)))
    elif not isinstance(concl, Leq):
        raise TypeError(f"not a conclusion: {concl!r}")

    lhs_chain = _meet_chain(lhs)
    rhs_chain = _meet_chain(rhs) if kind == "eq" else []
    terms: list[Term] = [lhs, rhs, *lhs_chain, *rhs_chain]
    for _, left, right in term_hyps:
        terms += [left, right]
    program, roots = compile_terms(terms, order, alias_map)
    lhs_root, rhs_root = roots[0], roots[1]
    lhs_roots = roots[2 : 2 + len(lhs_chain)]
    rhs_roots = roots[2 + len(lhs_chain) : 2 + len(lhs_chain) + len(rhs_chain)]
    hyp_roots = roots[2 + len(lhs_chain) + len(rhs_chain) :]

    ready: list[int] = []
    constant_nodes: list[tuple[int, int, int, int]] = []
    depth_nodes: list[list[tuple[int, int, int, int]]] = [[] for _ in order]
    for idx, (op, a, b) in enumerate(program.nodes):
        if op == OP_VAR:
            at = a
        elif op in (OP_ZERO, OP_ONE):
            at = -1
        elif op == OP_ORTHO:
            at = ready[a]
        else:
            at = max(ready[a], ready[b])
        ready.append(at)
        (constant_nodes if at < 0 else depth_nodes[at]).append((idx, op, a, b))

    n = len(order)
    hyp_at: list[list[tuple[int, int, int]]] = [[] for _ in order]
    constant_hyps: list[tuple[int, int, int]] = []
    for i, (hyp_kind, _, _) in enumerate(term_hyps):
        left_root, right_root = hyp_roots[2 * i], hyp_roots[2 * i + 1]
        at = max(ready[left_root], ready[right_root])
        entry = (hyp_kind, left_root, right_root)
        (constant_hyps if at < 0 else hyp_at[at]).append(entry)

    orth_links: list[list[int]] = [[] for _ in order]
    self_orthogonal = [False] * n
    for x, y in edges:
        dx, dy = depth_of[x], depth_of[y]
        if dx == dy:
            self_orthogonal[dx] = True
        else:
            later, earlier = max(dx, dy), min(dx, dy)
            if earlier not in orth_links[later]:
                orth_links[later].append(earlier)

    def parts(chain_roots: list[int]) -> list[list[int]]:
        grouped: list[list[int]] = [[] for _ in range(n + 1)]
        for root in chain_roots:
            grouped[ready[root] + 1].append(root)
        return grouped

    lat = lattice
    orth_mask = tuple(lat.below[lat.ortho_table[x]] for x in range(lat.size))
    self_mask = sum(1 << x for x in range(lat.size) if orth_mask[x] >> x & 1)
    atom_mask = sum(1 << x for x in lat.atoms())
    return CheckPlan(
        lattice=lattice,
        inference=inference,
        order=order,
        aliases=aliases,
        size=lat.size,
        constant_nodes=constant_nodes,
        depth_nodes=depth_nodes,
        node_count=len(program.nodes),
        orth_links=orth_links,
        self_orthogonal=self_orthogonal,
        hyp_at=hyp_at,
        constant_hyps=constant_hyps,
        kind=kind,
        lhs_root=lhs_root,
        rhs_root=rhs_root,
        rhs_ready=ready[rhs_root],
        lhs_parts=parts(lhs_roots),
        rhs_parts=parts(rhs_roots) if kind == "eq" else [],
        orth_mask=orth_mask,
        self_mask=self_mask,
        atom_mask=atom_mask,
    )


# ── Walking the assignment tree ──────────────────────────────────────────────


@dataclass
class WalkStats:
    examined: int = 0
    pruned: int = 0
    steps: int = 0


class StopWalk(Exception):
    """Raised inside a walk to abandon it (budget spent or cancelled)."""


class Walker:
    """Depth-first walk over the assignments allowed by the orthogonality hypotheses.

    ``leaf`` is called with the value vector of every complete assignment that
    satisfies all hypotheses and returns True to stop. With ``prune`` the
    conclusion is used to close subtrees that cannot hold a counterexample.
    ``choices`` orders the candidate values at a depth (default: ascending).
    """

    def __init__(
        self,
        plan: CheckPlan,
        *,
        prune: bool = True,
        choices: Callable[[int, int], list[int]] | None = None,
        on_step: Callable[[WalkStats], None] | None = None,
    ) -> None:
        self.plan = plan
        self.prune = prune
        self.choices = choices
        self.on_step = on_step
        self.stats = WalkStats()
        lat = plan.lattice
        self.ortho = lat.ortho_table
        self.meet = lat.meet_table
        self.join = lat.join_table
        self.below = lat.below
        self.sasaki = lat.sasaki_table
        self.equiv = lat.equiv_table
        self.one = lat.one
        self.vals = [0] * plan.node_count
        self.values = [0] * plan.depth
        self.full = (1 << lat.size) - 1
        n = plan.depth
        self.lhs_meet = [self.one] * (n + 1)
        self.rhs_meet = [self.one] * (n + 1)

    def _evaluate(self, nodes: list[tuple[int, int, int, int]]) -> None:
        vals, values = self.vals, self.values
        ortho, meet, join = self.ortho, self.meet, self.join
        for idx, op, a, b in nodes:
            if op == OP_VAR:
                vals[idx] = values[a]
            elif op == OP_ORTHO:
                vals[idx] = ortho[vals[a]]
            elif op == OP_MEET:
                vals[idx] = meet[vals[a]][vals[b]]
            elif op == OP_JOIN:
                vals[idx] = join[vals[a]][vals[b]]
            elif op == OP_SASAKI:
                vals[idx] = self.sasaki[vals[a]][vals[b]]
            elif op == OP_EQUIV:
                vals[idx] = self.equiv[vals[a]][vals[b]]
            elif op == OP_ZERO:
                vals[idx] = 0
            else:
                vals[idx] = self.one

    def _hypotheses_hold(self, entries: list[tuple[int, int, int]]) -> bool:
        vals = self.vals
        for kind, left, right in entries:
            if kind == HYP_ORTHOGONAL:
                if not self.below[self.ortho[vals[right]]] >> vals[left] & 1:
                    return False
            elif vals[left] != vals[right]:
                return False
        return True

    def _closed(self, slot: int) -> bool:
        """True when no extension of the current partial assignment can falsify the conclusion."""
        plan, vals, meet = self.plan, self.vals, self.meet
        lhs = self.lhs_meet[slot - 1] if slot else self.one
        for root in plan.lhs_parts[slot]:
            lhs = meet[lhs][vals[root]]
        self.lhs_meet[slot] = lhs
        if plan.kind == "leq":
            if lhs == 0:
                return True
            if plan.rhs_ready < slot and self.below[vals[plan.rhs_root]] >> lhs & 1:
                return True
            return False
        rhs = self.rhs_meet[slot - 1] if slot else self.one
        for root in plan.rhs_parts[slot]:
            rhs = meet[rhs][vals[root]]
        self.rhs_meet[slot] = rhs
        return lhs == 0 and rhs == 0

    def conclusion_holds(self) -> bool:
        plan, vals = self.plan, self.vals
        lhs, rhs = vals[plan.lhs_root], vals[plan.rhs_root]
        if plan.kind == "leq":
            return bool(self.below[rhs] >> lhs & 1)
        return lhs == rhs

    def candidates(self, depth: int) -> int:
        plan, values = self.plan, self.values
        mask = self.full
        for earlier in plan.orth_links[depth]:
            mask &= plan.orth_mask[values[earlier]]
        if plan.self_orthogonal[depth]:
            mask &= plan.self_mask
        return mask

    def run(self, leaf: Callable[[list[int]], bool], first: int | None = None) -> bool:
        """Walk everything (or only the subtree with ``first`` at depth 0); True if stopped."""
        plan = self.plan
        self._evaluate(plan.constant_nodes)
        if not self._hypotheses_hold(plan.constant_hyps):
            return False
        if self.prune and self._closed(0):
            self.stats.pruned += 1
            return False
        if plan.depth == 0:
            self.stats.examined += 1
            return leaf(self.values)
        return self._descend(0, leaf, first)

    def _descend(self, depth: int, leaf: Callable[[list[int]], bool], only: int | None) -> bool:
        plan, stats = self.plan, self.stats
        mask = self.candidates(depth)
        if only is not None:
            mask &= 1 << only
        order = self.choices(depth, mask) if self.choices is not None else bits(mask)
        last = depth == plan.depth - 1
        nodes, hyps = plan.depth_nodes[depth], plan.hyp_at[depth]
        for value in order:
            stats.steps += 1
            if self.on_step is not None:
                self.on_step(stats)
            self.values[depth] = value
            self._evaluate(nodes)
            if hyps and not self._hypotheses_hold(hyps):
                continue
            if self.prune and self._closed(depth + 1):
                stats.pruned += 1
                continue
            if last:
                stats.examined += 1
                if leaf(self.values):
                    return True
            elif self._descend(depth + 1, leaf, None):
                return True
        return False


def random_choices(plan: CheckPlan, rng: random.Random) -> Callable[[int, int], list[int]]:
    """Shuffled candidates with atoms first."""

    def choose(depth: int, mask: int) -> list[int]:
        atoms = list(bits(mask & plan.atom_mask))
        rest = list(bits(mask & ~plan.atom_mask))
        rng.shuffle(atoms)
        rng.shuffle(rest)
        return atoms + rest

    return choose


def enumerate_assignments(
    lattice: Lattice,
    inference: Inference,
    how: VariableOrder = VariableOrder.MOST_CONSTRAINED,
) -> Iterator[dict[str, int]]:
    """Every assignment satisfying all hypotheses, produced by the pruned walk."""
    plan = build_plan(lattice, inference, how)
    found: list[dict[str, int]] = []

    def collect(values: list[int]) -> bool:
        found.append(plan.assignment(values))
        return False

    Walker(plan, prune=False).run(collect)
    yield from found


def naive_assignments(lattice: Lattice, inference: Inference) -> Iterator[dict[str, int]]:
    """Full product of element values, filtered by the hypotheses afterwards."""
    names = list(inference.variables)
    terms: list[Term] = []
    for hyp in inference.hypotheses:
        terms += [hyp.left, hyp.right]
    program, roots = compile_terms(terms, names)
    below, ortho = lattice.below, lattice.ortho_table
    for values in itertools.product(range(lattice.size), repeat=len(names)):
        out = program.run(lattice, values)
        ok = True
        for i, hyp in enumerate(inference.hypotheses):
            left, right = out[roots[2 * i]], out[roots[2 * i + 1]]
            if isinstance(hyp, Orthogonal):
                ok = bool(below[ortho[right]] >> left & 1)
            else:
                ok = left == right
            if not ok:
                break
        if ok:
            yield dict(zip(names, values, strict=True))
