from pydantic import BaseModel, ConfigDict, Field

from src.models.enums import SearchMode, VariableOrder, VerdictStatus


class Strategy(BaseModel):
    """How to decide an inference.

    ``budget`` bounds the assignments examined in search mode; ``seed`` makes
    the randomized restarts reproducible.
    """

    model_config = ConfigDict(frozen=True)

    mode: SearchMode = SearchMode.EXHAUSTIVE
    budget: int = Field(default=2_000_000, ge=1)
    seed: int = 0
    variable_order: VariableOrder = VariableOrder.MOST_CONSTRAINED
    workers: int = Field(default=1, ge=1)

    @property
    def key(self) -> str:
        """Cache key; worker count does not affect verdicts so it is left out."""
        if self.mode == SearchMode.EXHAUSTIVE:
            return f"exhaustive/{self.variable_order}"
        return f"search/{self.budget}/{self.seed}/{self.variable_order}"


class Verdict(BaseModel):
    status: VerdictStatus
    counterexample: dict[str, int] | None = None
    counterexample_labels: dict[str, str] | None = None
    assignments_examined: int = 0
    pruned_subtrees: int = 0
    elapsed: float = 0.0
    cached: bool = False

    @property
    def holds(self) -> bool:
        """True only for a definitive pass."""
        return self.status == VerdictStatus.HOLDS

    @property
    def falsified(self) -> bool:
        return self.status == VerdictStatus.FALSIFIED


class MatrixRow(BaseModel):
    lattice: str
    lattice_digest: str
    family: str
    strategy: str
    verdict: Verdict
