"""Greechie conditions and loop detection."""

from itertools import combinations

from src.models.diagram import ConditionResult, GreechieDiagram, Loop, ValidationReport

_CONDITIONS = {
    1: "every atom lies in at least one block",
    2: "with two or more atoms, every block has at least two atoms",
    3: "a block meeting another block has at least three atoms",
    4: "two distinct blocks share at most one atom",
    5: "no loop of order 3",
}


def find_loops(diagram: GreechieDiagram, max_order: int) -> list[Loop]:
    """All loops of order 2..``max_order``, each once up to rotation and reflection.

    A loop is a cycle of distinct blocks e1..en with distinct junction atoms
    v_i in e_i ∩ e_(i+1), indices taken cyclically.
    """
    block_sets = [frozenset(b.atoms) for b in diagram.blocks]
    count = len(block_sets)
    shared: dict[tuple[int, int], list[str]] = {}
    for i, j in combinations(range(count), 2):
        common = [a for a in diagram.blocks[i].atoms if a in block_sets[j]]
        if common:
            shared[(i, j)] = shared[(j, i)] = common

    neighbours = [[j for j in range(count) if (i, j) in shared] for i in range(count)]
    found: dict[tuple[tuple[int, ...], tuple[str, ...]], Loop] = {}

    def extend(path: list[int], junctions: list[str]) -> None:
        start, last = path[0], path[-1]
        if len(path) >= 2:
            for atom in shared.get((last, start), []):
                if atom in junctions:
                    continue
                loop = _canonical(path, [*junctions, atom])
                found.setdefault((loop.blocks, loop.junction_atoms), loop)
        if len(path) == max_order:
            return
        for nxt in neighbours[last]:
            if nxt <= start or nxt in path:
                continue
            for atom in shared[(last, nxt)]:
                if atom not in junctions:
                    extend([*path, nxt], [*junctions, atom])

    if max_order >= 2:
        for start in range(count):
            extend([start], [])

    return sorted(found.values(), key=lambda lp: (lp.order, lp.blocks, lp.junction_atoms))


def _canonical(blocks: list[int], junctions: list[str]) -> Loop:
    """Least rotation/reflection of the block cycle; junction i joins blocks i and i+1."""
    n = len(blocks)
    candidates = []
    for k in range(n):
        rot_b = blocks[k:] + blocks[:k]
        rot_j = junctions[k:] + junctions[:k]
        candidates.append((tuple(rot_b), tuple(rot_j)))
        ref_b = [rot_b[0], *reversed(rot_b[1:])]
        ref_j = list(reversed(rot_j))
        candidates.append((tuple(ref_b), tuple(ref_j)))
    best_blocks, best_junctions = min(candidates)
    return Loop(blocks=best_blocks, junction_atoms=best_junctions)


def validate(diagram: GreechieDiagram) -> ValidationReport:
    """Check the five Greechie conditions; failures become report entries."""
    block_sets = [frozenset(b.atoms) for b in diagram.blocks]
    results: list[ConditionResult] = []

    used = set().union(*block_sets) if block_sets else set()
    orphans = [a for a in diagram.atoms if a not in used]
    results.append(_result(1, not orphans, atoms=orphans))

    small: list[int] = []
    if len(diagram.atoms) >= 2:
        small = [i for i, b in enumerate(block_sets) if len(b) < 2]
    results.append(_result(2, not small, blocks=small))

    meeting: set[int] = set()
    for i, j in combinations(range(len(block_sets)), 2):
        if block_sets[i] & block_sets[j]:
            meeting.update((i, j))
    thin = sorted(i for i in meeting if len(block_sets[i]) < 3)
    results.append(_result(3, not thin, blocks=thin))

    overlapping: list[int] = []
    overlap_atoms: list[str] = []
    for i, j in combinations(range(len(block_sets)), 2):
        common = block_sets[i] & block_sets[j]
        if len(common) > 1:
            overlapping.extend(b for b in (i, j) if b not in overlapping)
            overlap_atoms.extend(a for a in diagram.atoms if a in common and a not in overlap_atoms)
    results.append(_result(4, not overlapping, atoms=overlap_atoms, blocks=overlapping))

    loops = find_loops(diagram, 4)
    triangles = [lp for lp in loops if lp.order == 3]
    if triangles:
        first = triangles[0]
        results.append(
            _result(
                5,
                False,
                atoms=list(first.junction_atoms),
                blocks=list(first.blocks),
                loop=first,
            )
        )
    else:
        results.append(_result(5, True))

    return ValidationReport(conditions=results, order4_loops=[lp for lp in loops if lp.order == 4])


def _result(
    condition: int,
    passed: bool,
    atoms: list[str] | None = None,
    blocks: list[int] | None = None,
    loop: Loop | None = None,
) -> ConditionResult:
    return ConditionResult(
        condition=condition,
        description=_CONDITIONS[condition],
        passed=passed,
        atoms=atoms or [],
        blocks=blocks or [],
        loop=loop,
    )
