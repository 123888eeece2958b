"""Text grammar for terms: ' ^ v -> == ==(n) ==g."""

from src.terms.ast import (
    Commutes,
    Eq,
    Equality,
    Equiv,
    EquivN,
    GodowskiChain,
    Inference,
    Join,
    Leq,
    Meet,
    One,
    Ortho,
    Orthogonal,
    Sasaki,
    Term,
    Var,
    Zero,
)


def _flatten(term: Term, kind: type) -> list[Term]:
    if isinstance(term, kind):
        return _flatten(term.left, kind) + _flatten(term.right, kind)  # type: ignore[attr-defined]
    return [term]


def format_term(term: Term) -> str:
    match term:
        case Var(name):
            return name
        case Zero():
            return "0"
        case One():
            return "1"
        case Ortho(arg):
            inner = format_term(arg)
            if isinstance(arg, Var | Zero | One | Ortho):
                return f"{inner}'"
            return f"({inner})'"
        case Meet():
            return "(" + " ^ ".join(format_term(t) for t in _flatten(term, Meet)) + ")"
        case Join():
            return "(" + " v ".join(format_term(t) for t in _flatten(term, Join)) + ")"
        case Sasaki(l, r):
            return f"({format_term(l)} -> {format_term(r)})"
        case Equiv(l, r):
            return f"({format_term(l)} == {format_term(r)})"
        case EquivN(n, l, r, aux):
            extras = ",".join(format_term(a) for a in aux)
            return f"({format_term(l)} ==({n})[{extras}] {format_term(r)})"
        case GodowskiChain(items):
            return "==g(" + ", ".join(format_term(t) for t in items) + ")"
    raise TypeError(f"not a term: {term!r}")


def _strip(text: str) -> str:
    """Drop one pair of outer parentheses when they enclose the whole text."""
    if not (text.startswith("(") and text.endswith(")")):
        return text
    depth = 0
    for i, char in enumerate(text):
        depth += char == "("
        depth -= char == ")"
        if depth == 0 and i < len(text) - 1:
            return text
    return text[1:-1]


def format_inference(inference: Inference) -> str:
    """``hyp & hyp => conclusion``; hypothesis-free inferences print the conclusion alone."""
    parts = []
    for hyp in inference.hypotheses:
        left, right = format_term(hyp.left), format_term(hyp.right)
        if isinstance(hyp, Orthogonal):
            parts.append(f"{left} _|_ {right}")
        elif isinstance(hyp, Equality):
            parts.append(f"{_strip(left)} = {_strip(right)}")
    concl = inference.conclusion
    left, right = _strip(format_term(concl.left)), _strip(format_term(concl.right))
    if isinstance(concl, Leq):
        text = f"{left} <= {right}"
    elif isinstance(concl, Eq):
        text = f"{left} = {right}"
    elif isinstance(concl, Commutes):
        text = f"({left}) C ({right})"
    else:
        raise TypeError(f"not a conclusion: {concl!r}")
    if parts:
        return " & ".join(parts) + " => " + text
    return text
