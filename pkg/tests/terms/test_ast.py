import pytest

from src.errors import BadParameterError
from src.terms import (
    Eq,
    EquivN,
    GodowskiChain,
    Inference,
    Join,
    Meet,
    One,
    Ortho,
    Orthogonal,
    Var,
    Zero,
    join_all,
    meet_all,
    term_variables,
    variables,
)


class TestTerms:
    def test_structural_equality(self):
        assert Meet(Var("a"), Ortho(Var("b"))) == Meet(Var("a"), Ortho(Var("b")))
        assert hash(Join(Var("a"), Zero())) == hash(Join(Var("a"), Zero()))

    def test_empty_meet_and_join(self):
        assert meet_all([]) == One()
        assert join_all([]) == Zero()

    def test_meet_all_is_left_nested(self):
        a, b, c = variables("a", "b", "c")
        assert meet_all([a, b, c]) == Meet(Meet(a, b), c)

    def test_term_variables_first_occurrence_order(self):
        a, b, c = variables("a", "b", "c")
        assert term_variables(Join(c, Meet(a, c)), b) == ["c", "a", "b"]

    def test_equiv_n_needs_n_at_least_three(self):
        a, b = variables("a", "b")
        with pytest.raises(BadParameterError):
            EquivN(2, a, b, ())

    def test_equiv_n_aux_count(self):
        a, b, c = variables("a", "b", "c")
        with pytest.raises(BadParameterError):
            EquivN(4, a, b, (c,))

    def test_godowski_chain_needs_three(self):
        with pytest.raises(BadParameterError):
            GodowskiChain(variables("a", "b"))


class TestInference:
    def test_valid(self):
        a, b = variables("a", "b")
        inf = Inference((Orthogonal(a, b),), Eq(Join(a, b), Join(b, a)), ("a", "b"))
        assert inf.variables == ("a", "b")

    def test_missing_variable(self):
        a, b = variables("a", "b")
        with pytest.raises(BadParameterError):
            Inference((), Eq(a, b), ("a",))

    def test_duplicate_variable(self):
        a = Var("a")
        with pytest.raises(BadParameterError):
            Inference((), Eq(a, a), ("a", "a"))

    def test_name_ignored_by_equality(self):
        a = Var("a")
        assert Inference((), Eq(a, a), ("a",), name="x") == Inference((), Eq(a, a), ("a",))
