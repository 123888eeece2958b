from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

_FORBIDDEN_IN_NAMES = set(",.#") | {" ", "\t", "\r", "\n"}


class Block(BaseModel):
    model_config = ConfigDict(frozen=True)

    atoms: tuple[str, ...]

    @field_validator("atoms")
    @classmethod
    def _distinct_atoms(cls, atoms: tuple[str, ...]) -> tuple[str, ...]:
        if not atoms:
            raise ValueError("a block needs at least one atom")
        if len(set(atoms)) != len(atoms):
            raise ValueError(f"repeated atom in block {''.join(atoms)}")
        for name in atoms:
            if not name or _FORBIDDEN_IN_NAMES & set(name):
                raise ValueError(f"bad atom name {name!r}")
        return atoms

    def __len__(self) -> int:
        return len(self.atoms)

    def __contains__(self, atom: object) -> bool:
        return atom in self.atoms


class GreechieDiagram(BaseModel):
    """Atom set plus ordered block list.

    ``atoms`` is explicit so a diagram may carry atoms that no block uses;
    :func:`src.greechie.validate` reports those.
    """

    model_config = ConfigDict(frozen=True)

    atoms: tuple[str, ...]
    blocks: tuple[Block, ...]

    @model_validator(mode="after")
    def _atoms_cover_blocks(self) -> "GreechieDiagram":
        if len(set(self.atoms)) != len(self.atoms):
            raise ValueError("atom names must be unique")
        known = set(self.atoms)
        for block in self.blocks:
            missing = [a for a in block.atoms if a not in known]
            if missing:
                raise ValueError(f"block atoms {missing} are not declared atoms")
        return self

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[str]]) -> "GreechieDiagram":
        """Build a diagram whose atoms are those of ``blocks`` in first-appearance order."""
        block_list = [Block(atoms=tuple(b)) for b in blocks]
        atoms: dict[str, None] = {}
        for block in block_list:
            for atom in block.atoms:
                atoms.setdefault(atom)
        return cls(atoms=tuple(atoms), blocks=tuple(block_list))

    def blocks_containing(self, atom: str) -> list[int]:
        return [i for i, block in enumerate(self.blocks) if atom in block.atoms]


class Loop(BaseModel):
    model_config = ConfigDict(frozen=True)

    blocks: tuple[int, ...]
    junction_atoms: tuple[str, ...]

    @property
    def order(self) -> int:
        return len(self.blocks)


class ConditionResult(BaseModel):
    condition: int
    description: str
    passed: bool
    atoms: list[str] = []
    blocks: list[int] = []
    loop: Loop | None = None


class ValidationReport(BaseModel):
    conditions: list[ConditionResult]
    order4_loops: list[Loop] = []

    @property
    def valid(self) -> bool:
        """True iff every Greechie condition holds."""
        return all(c.passed for c in self.conditions)

    @property
    def lattice_ok(self) -> bool:
        """Valid and free of order-4 loops, so the pasting is an OML."""
        return self.valid and not self.order4_loops
