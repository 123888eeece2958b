from collections import Counter

from pydantic import BaseModel, ConfigDict


class CondensedStateEquation(BaseModel):
    """Sum-of-terms equation in juxtaposition notation, e.g. ``ad+be+cf=db+ec+fa``.

    Each term is the tuple of its variables in written order. Repeated terms
    are kept, since multiplicity matters for balance.
    """

    model_config = ConfigDict(frozen=True)

    lhs: tuple[tuple[str, ...], ...]
    rhs: tuple[tuple[str, ...], ...]

    @property
    def variables(self) -> list[str]:
        """Variables in first-appearance order, left side first."""
        seen: dict[str, None] = {}
        for term in (*self.lhs, *self.rhs):
            for v in term:
                seen.setdefault(v)
        return list(seen)

    def counts(self) -> dict[str, tuple[int, int]]:
        left = Counter(v for term in self.lhs for v in term)
        right = Counter(v for term in self.rhs for v in term)
        return {v: (left[v], right[v]) for v in self.variables}

    @property
    def balanced(self) -> bool:
        return all(a == b for a, b in self.counts().values())
