"""Named condensed state equations."""

from src.errors import BadParameterError
from src.models.condensed import CondensedStateEquation
from src.terms.condensed import parse_condensed

MGE_CORPUS: dict[str, str] = {
    "3go": "ad+be+cf=db+ec+fa",
    "newst1": "abc+de+fg+hj=gb+ec+ja+hfd",
    "st2new": "ab+cde+fg+fg+hjk+lk+mn+pe=gk+gk+db+fe+fe+nlc+pja+mh",
    "mgeq1": "abc+de+fg+hj+kl=eb+dh+faj+lc+kg",
    "mgeq2": "ab+cd+ef+ghj+kl+kl=kd+bl+jl+fk+ha+gec",
    "mgeq3": "abc+def+gh+jk+lmn+pqr=fn+rc+dkb+gma+qeh+plj",
}


def resolve_mge(text: str) -> CondensedStateEquation:
    """Corpus name or literal condensed equation."""
    key = text.strip()
    if key in MGE_CORPUS:
        return parse_condensed(MGE_CORPUS[key])
    if "=" not in key:
        raise BadParameterError(f"unknown MGE {key!r}; known: {', '.join(MGE_CORPUS)}")
    return parse_condensed(key)
