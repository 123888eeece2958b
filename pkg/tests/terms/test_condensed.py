import pytest

from src.errors import CondensedSyntaxError, RepeatedVariableInTermError, UnbalancedEquationError
from src.terms import (
    Eq,
    Join,
    Meet,
    Orthogonal,
    Var,
    format_inference,
    mge_to_inference,
    parse_condensed,
    serialize_condensed,
)


class TestParseCondensed:
    def test_three_go(self):
        eq = parse_condensed("ad+be+cf=db+ec+fa")
        assert eq.lhs == (("a", "d"), ("b", "e"), ("c", "f"))
        assert eq.variables == ["a", "d", "b", "e", "c", "f"]
        assert eq.balanced

    def test_whitespace_ignored(self):
        assert parse_condensed(" ab + cd = ac + bd ") == parse_condensed("ab+cd=ac+bd")

    def test_repeated_terms_are_kept(self):
        eq = parse_condensed("ab+ab=ab+ab")
        assert len(eq.lhs) == 2

    def test_round_trip(self):
        text = "abc+de+fg+hj=gb+ec+ja+hfd"
        assert serialize_condensed(parse_condensed(text)) == text

    def test_unbalanced(self):
        with pytest.raises(UnbalancedEquationError) as exc_info:
            parse_condensed("ab+c=ac")
        assert exc_info.value.counts == {"b": (1, 0)}

    def test_repeated_variable_in_term(self):
        with pytest.raises(RepeatedVariableInTermError) as exc_info:
            parse_condensed("aab=aab")
        assert exc_info.value.variable == "a"

    @pytest.mark.parametrize("text", ["ab+cd", "ab=cd=ef", "ab+=ab", "=ab", "a1=a1", "aB=aB"])
    def test_syntax_errors(self, text: str):
        with pytest.raises(CondensedSyntaxError):
            parse_condensed(text)


class TestMgeToInference:
    def test_hypotheses_and_conclusion(self):
        inf = mge_to_inference(parse_condensed("ab+cd=ac+bd"))
        a, b, c, d = (Var(s) for s in "abcd")
        assert inf.hypotheses == (
            Orthogonal(a, b),
            Orthogonal(c, d),
            Orthogonal(a, c),
            Orthogonal(b, d),
        )
        assert inf.conclusion == Eq(Meet(Join(a, b), Join(c, d)), Meet(Join(a, c), Join(b, d)))
        assert inf.variables == ("a", "b", "c", "d")
        assert inf.name == "ab+cd=ac+bd"

    def test_repeated_pairs_give_one_hypothesis(self):
        inf = mge_to_inference(parse_condensed("ab+ab=ab+ab"))
        assert len(inf.hypotheses) == 1

    def test_formatted(self):
        inf = mge_to_inference(parse_condensed("ab+cd=ac+bd"))
        assert format_inference(inf) == (
            "a _|_ b & c _|_ d & a _|_ c & b _|_ d => (a v b) ^ (c v d) = (a v c) ^ (b v d)"
        )
