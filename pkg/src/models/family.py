from pydantic import BaseModel, ConfigDict, model_validator

from src.errors import BadParameterError
from src.models.diagram import GreechieDiagram
from src.models.enums import FamilyName, Outcome

# Families taking a single size parameter and its smallest legal value.
_SIZED = {
    FamilyName.NOA: 3,
    FamilyName.NOA_INFERENCE: 3,
    FamilyName.NOA_IDENTITY: 3,
    FamilyName.NOA_IDENTITY_CONVERSE: 3,
    FamilyName.OA_TRANSITIVITY: 3,
    FamilyName.NGO: 3,
    FamilyName.NGO_INFERENCE: 3,
    FamilyName.GODOWSKI_EQUIVALENT: 3,
    FamilyName.GODOWSKI_JK: 3,
    FamilyName.EN: 3,
    FamilyName.EPRIME: 3,
    FamilyName.E1: 3,
}
_OA3_VARIANTS = tuple("abcdefghij")
_GO_EQUIVALENTS = ("c", "d", "e")
MGE_DERIVED = ("newst1d", "eq45", "eq46", "eq47")


class FamilyId(BaseModel):
    """Names one equation of a family, e.g. ``noa:4``, ``gojk:4:1:3`` or ``mge:3go``."""

    model_config = ConfigDict(frozen=True)

    name: FamilyName
    n: int | None = None
    j: int | None = None
    k: int | None = None
    variant: str | None = None

    @model_validator(mode="after")
    def _check_parameters(self) -> "FamilyId":
        name, n = self.name, self.n
        if name in _SIZED:
            if n is None or n < _SIZED[name]:
                raise BadParameterError(f"{name} needs n >= {_SIZED[name]}, got {n}")
        if name == FamilyName.GODOWSKI_JK:
            if self.j is None or self.k is None or not (1 <= self.j <= n and 1 <= self.k <= n):
                raise BadParameterError(f"gojk needs 1 <= j, k <= {n}")
        if name == FamilyName.GODOWSKI_TRANSITIVITY:
            if self.j is None or self.k is None or self.j < 1 or self.k < 1:
                raise BadParameterError("gotrans needs i, j >= 1")
        if name == FamilyName.OA3_VARIANT and self.variant not in _OA3_VARIANTS:
            raise BadParameterError(f"oa3variant must be one of a..j, got {self.variant!r}")
        if name == FamilyName.GODOWSKI_EQUIVALENT and self.variant not in _GO_EQUIVALENTS:
            raise BadParameterError(f"goeq must be c, d or e, got {self.variant!r}")
        if name == FamilyName.MGE_DERIVED and self.variant not in MGE_DERIVED:
            raise BadParameterError(f"mgederived must be one of {', '.join(MGE_DERIVED)}")
        if name == FamilyName.MGE and not self.variant:
            raise BadParameterError("mge needs a condensed equation or corpus name")
        return self

    @property
    def key(self) -> str:
        name = self.name.value
        match self.name:
            case FamilyName.OML | FamilyName.MODULAR | FamilyName.DISTRIBUTIVE:
                return name
            case FamilyName.GODOWSKI_EQUIVALENT:
                return f"{name}:{self.variant}:{self.n}"
            case FamilyName.GODOWSKI_JK:
                return f"{name}:{self.n}:{self.j}:{self.k}"
            case FamilyName.GODOWSKI_TRANSITIVITY:
                return f"{name}:{self.j}:{self.k}"
            case FamilyName.OA3_VARIANT | FamilyName.MGE | FamilyName.MGE_DERIVED:
                return f"{name}:{self.variant}"
        return f"{name}:{self.n}"

    def __str__(self) -> str:
        return self.key

    @classmethod
    def parse(cls, text: str) -> "FamilyId":
        """Inverse of :attr:`key`. ``goeq:c`` defaults n to 3."""
        head, _, rest = text.strip().partition(":")
        try:
            name = FamilyName(head.lower())
        except ValueError:
            raise BadParameterError(f"unknown family {head!r}") from None
        parts = rest.split(":") if rest else []

        def number(value: str) -> int:
            try:
                return int(value)
            except ValueError:
                raise BadParameterError(f"{text!r}: {value!r} is not an integer") from None

        match name:
            case FamilyName.OML | FamilyName.MODULAR | FamilyName.DISTRIBUTIVE:
                if parts:
                    raise BadParameterError(f"{name} takes no parameters")
                return cls(name=name)
            case FamilyName.MGE:
                return cls(name=name, variant=rest)
            case FamilyName.OA3_VARIANT | FamilyName.MGE_DERIVED:
                return cls(name=name, variant=rest.lower() if rest else None)
            case FamilyName.GODOWSKI_EQUIVALENT:
                if len(parts) not in (1, 2):
                    raise BadParameterError("expected goeq:c|d|e[:N]")
                n = number(parts[1]) if len(parts) == 2 else 3
                return cls(name=name, variant=parts[0].lower(), n=n)
            case FamilyName.GODOWSKI_JK:
                if len(parts) != 3:
                    raise BadParameterError("expected gojk:N:J:K")
                n, j, k = (number(p) for p in parts)
                return cls(name=name, n=n, j=j, k=k)
            case FamilyName.GODOWSKI_TRANSITIVITY:
                if len(parts) != 2:
                    raise BadParameterError("expected gotrans:I:J")
                return cls(name=name, j=number(parts[0]), k=number(parts[1]))
        if len(parts) != 1:
            raise BadParameterError(f"expected {name}:N")
        return cls(name=name, n=number(parts[0]))


class Claim(BaseModel):
    """A documented verdict for a fixture: a family key (or ``strong-quantum``) and its outcome."""

    model_config = ConfigDict(frozen=True)

    subject: str
    outcome: Outcome

    @property
    def family(self) -> FamilyId | None:
        try:
            return FamilyId.parse(self.subject)
        except BadParameterError:
            return None


class Fixture(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    file: str
    source: str = ""
    diagram: GreechieDiagram
    claims: tuple[Claim, ...] = ()
