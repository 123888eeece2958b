"""State polytopes of finite lattices.

Greechie-backed lattices are encoded by their atoms: one variable per atom,
each block summing to 1, and m(x) the sum over the atoms whose join is x.
Lattices without block structure get one variable per element with the
state axioms written out directly.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from src.errors import NotGreechieBackedError
from src.lattice.core import Lattice
from src.models.enums import Sense
from src.models.states import StateWitness
from src.states.simplex import LPProblem

logger = logging.getLogger(__name__)

Encoding = Literal["auto", "blocks", "elements"]


@dataclass(frozen=True)
class StatePolytope:
    lattice: Lattice
    problem: LPProblem
    forms: tuple[dict[int, Fraction], ...]
    by_blocks: bool

    def form(self, x: int) -> dict[int, Fraction]:
        """Linear form of m(x) over the LP variables."""
        return self.forms[self.lattice.check_index(x)]

    def valuation(self, point: Sequence[Fraction]) -> list[Fraction]:
        return [sum((c * point[j] for j, c in f.items()), Fraction(0)) for f in self.forms]

    def witness(self, point: Sequence[Fraction]) -> StateWitness:
        atoms: dict[str, Fraction] = {}
        if self.by_blocks:
            atoms = dict(zip(self.problem.variables, point, strict=True))
        return StateWitness(atoms=atoms, elements=self.valuation(point))


def state_polytope(lattice: Lattice, encoding: Encoding = "auto") -> StatePolytope:
    structure = lattice.structure
    if encoding == "blocks" and structure is None:
        raise NotGreechieBackedError(f"{lattice.name or 'lattice'} has no atom/block structure")
    if structure is not None and encoding != "elements":
        problem = LPProblem(list(structure.atom_names))
        column = {atom: j for j, atom in enumerate(structure.atoms)}
        for block in structure.blocks:
            names = "".join(structure.atom_names[column[a]] for a in block)
            problem.add({column[a]: 1 for a in block}, Sense.EQ, 1, label=f"block {names}")
        forms = tuple(
            {column[a]: Fraction(1) for a in members} for members in structure.element_atoms
        )
        return StatePolytope(lattice, problem, forms, by_blocks=True)

    n = lattice.size
    problem = LPProblem([f"m[{lattice.label(x)}]" for x in range(n)])
    problem.add({0: 1}, Sense.EQ, 0, label="zero")
    problem.add({n - 1: 1}, Sense.EQ, 1, label="one")
    for x in range(1, n - 1):
        problem.add({x: 1}, Sense.LE, 1, label=f"bound {lattice.label(x)}")
    for x in range(1, n - 1):
        for y in lattice.orth_neighbors(x):
            if x < y < n - 1:
                j = lattice.join(x, y)
                coeffs: dict[int, Fraction] = {j: Fraction(1)}
                coeffs[x] = coeffs.get(x, Fraction(0)) - 1
                coeffs[y] = coeffs.get(y, Fraction(0)) - 1
                problem.add(
                    coeffs, Sense.EQ, 0, label=f"additive {lattice.label(x)},{lattice.label(y)}"
                )
    forms = tuple({x: Fraction(1)} for x in range(n))
    logger.debug("Element-level state encoding of %s: %d rows", lattice.name, len(problem.rows))
    return StatePolytope(lattice, problem, forms, by_blocks=False)


def state_violations(lattice: Lattice, values: Sequence[Fraction]) -> list[str]:
    """Every broken state property of a full element valuation."""
    problems: list[str] = []
    n = lattice.size
    if len(values) != n:
        return [f"expected {n} values, got {len(values)}"]
    if values[0] != 0:
        problems.append("m(0) != 0")
    if values[n - 1] != 1:
        problems.append("m(1) != 1")
    for x in range(n):
        label = lattice.label(x)
        if not 0 <= values[x] <= 1:
            problems.append(f"m({label}) outside [0, 1]")
        if values[x] + values[lattice.ortho(x)] != 1:
            problems.append(f"m({label}) + m({label}') != 1")
        for y in range(n):
            if x != y and lattice.leq(x, y) and values[x] > values[y]:
                problems.append(f"m({label}) > m({lattice.label(y)})")
            if x < y and lattice.orthogonal(x, y):
                if values[lattice.join(x, y)] != values[x] + values[y]:
                    problems.append(f"m({label} v {lattice.label(y)}) is not additive")
    return problems


def verify_state(lattice: Lattice, values: Sequence[Fraction]) -> bool:
    return not state_violations(lattice, values)
