import random
from itertools import product

import pytest

from src.errors import BadParameterError
from src.families import fixtures, generate, lemma_substitution, substitute, substitute_generators
from src.families.generators import mge_derived, ngo
from src.lattice import boolean, build, mo2
from src.terms import Join, Leq, Meet, Ortho, Sasaki, Var, compile_terms, evaluate
from tests.factories import make_lattice

A, B, C = Var("a"), Var("b"), Var("c")

# Generators that turn newst1 into the four-conjunct arrow inequality.
NEWST1_GENERATORS = {
    "a": Ortho(C),
    "b": Meet(C, B),
    "c": Ortho(Sasaki(C, B)),
    "d": Ortho(Sasaki(A, B)),
    "e": Meet(Sasaki(C, B), Sasaki(A, B)),
    "f": Meet(B, A),
    "g": Ortho(B),
    "h": Ortho(A),
    "j": Meet(A, C),
}


class TestSubstitute:
    def test_simultaneous(self):
        t = Join(A, B)
        assert substitute(t, {"a": B, "b": A}) == Join(B, A)

    def test_untouched_variables(self):
        assert substitute(Meet(A, C), {"a": Ortho(B)}) == Meet(Ortho(B), C)


class TestSubstituteGenerators:
    def test_identity_substitution(self):
        base = generate("mge:3go")
        result = substitute_generators(base, {}, lattices=[mo2()])
        assert result.inference.conclusion == base.conclusion
        assert result.discharged == ()
        assert len(result.retained) == len(base.hypotheses)

    def test_unknown_variable(self):
        with pytest.raises(BadParameterError):
            substitute_generators(generate("oml"), {"z": A}, lattices=[mo2()])

    def test_keep_conjunct_needs_equality(self):
        with pytest.raises(BadParameterError):
            substitute_generators(generate("noa:3"), {}, keep_rhs_conjunct=0, lattices=[mo2()])

    def test_keep_conjunct_out_of_range(self):
        with pytest.raises(BadParameterError):
            substitute_generators(
                generate("mge:newst1"), {}, keep_rhs_conjunct=9, lattices=[mo2()]
            )

    def test_newst1_reduces_to_short_arrow_form(self):
        result = substitute_generators(
            generate("mge:newst1"), NEWST1_GENERATORS, keep_rhs_conjunct=2
        )
        assert result.retained == ()
        assert len(result.discharged) == len(generate("mge:newst1").hypotheses)
        inf = result.inference
        assert isinstance(inf.conclusion, Leq)
        assert set(inf.variables) == {"a", "b", "c"}

        short = mge_derived("newst1d")
        rng = random.Random(3)
        for lat in (mo2(), make_lattice()):
            for _ in range(60):
                env = {v: rng.randrange(lat.size) for v in "abc"}
                short_env = {**env, "d": 0}
                assert evaluate(inf.conclusion.left, lat, env) == evaluate(
                    short.conclusion.left, lat, short_env
                )
                assert evaluate(inf.conclusion.right, lat, env) == evaluate(
                    Sasaki(C, A), lat, env
                )


def _assert_same_values(lat, n: int, assignments) -> None:
    """ngo(n) with a2 put equal to a1 against ngo(n-1), slot for slot."""
    merged = lemma_substitution(ngo(n), "a2", "a1")
    shorter = ngo(n - 1)
    programs = [
        compile_terms([inf.conclusion.left, inf.conclusion.right], inf.variables)
        for inf in (merged, shorter)
    ]
    for values in assignments:
        (p, roots), (q, roots_q) = programs
        left, right = p.run(lat, values), q.run(lat, values)
        assert [left[r] for r in roots] == [right[r] for r in roots_q], values


class TestLemmaSubstitution:
    def test_drops_target(self):
        inf = lemma_substitution(ngo(4), "a2", "a1")
        assert inf.variables == ("a1", "a3", "a4")
        assert inf.name == "ngo:4 [a2:=a1]"

    def test_unknown_variable(self):
        with pytest.raises(BadParameterError):
            lemma_substitution(ngo(3), "a9", "a1")

    @pytest.mark.parametrize(
        "lattice", [mo2(), boolean(3), make_lattice()], ids=lambda lat: lat.name
    )
    def test_identified_chain_matches_shorter_chain(self, lattice):
        _assert_same_values(lattice, 4, product(range(lattice.size), repeat=3))

    @pytest.mark.parametrize("lattice", [mo2(), boolean(3)], ids=lambda lat: lat.name)
    def test_identified_five_chain_matches_four_chain(self, lattice):
        _assert_same_values(lattice, 5, product(range(lattice.size), repeat=4))


@pytest.mark.slow
class TestLemmaSubstitutionOnFixtures:
    @pytest.mark.parametrize("n", [4, 5])
    def test_every_fixture(self, n):
        rng = random.Random(n)
        for fixture in fixtures():
            lat = build(fixture.diagram, name=fixture.id)
            samples = ([rng.randrange(lat.size) for _ in range(n - 1)] for _ in range(2000))
            _assert_same_values(lat, n, samples)
