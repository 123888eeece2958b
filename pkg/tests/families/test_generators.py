import pytest

from src.checker import check
from src.errors import BadParameterError
from src.families import generate, godowski
from src.families.generators import (
    e_n,
    e_one,
    e_prime,
    godowski_transitivity,
    mge_derived,
    ngo,
    ngo_inference,
    noa,
    noa_identity,
    noa_identity_converse,
    noa_inference,
    oa3_variant,
)
from src.lattice import boolean, mo2, o6
from src.models.enums import FamilyName
from src.models.family import MGE_DERIVED, FamilyId
from src.terms import Eq, GodowskiChain, Leq, Meet, One, Orthogonal, Sasaki, Var
from tests.factories import make_lattice, make_strategy


class TestShapes:
    def test_noa_variables(self):
        assert noa(4).variables == ("a1", "a2", "a3", "a4")
        assert isinstance(noa(3).conclusion, Leq)

    def test_noa_inference_variables_and_hypotheses(self):
        inf = noa_inference(4)
        assert inf.variables == ("a0", "b0", "a1", "b1", "a2", "b2")
        assert inf.hypotheses == tuple(
            Orthogonal(Var(f"a{i}"), Var(f"b{i}")) for i in range(3)
        )

    @pytest.mark.parametrize("n", [3, 4])
    def test_identity_converse_swaps_sides(self, n):
        forward, converse = noa_identity(n), noa_identity_converse(n)
        (hyp,) = forward.hypotheses
        (conv_hyp,) = converse.hypotheses
        assert (converse.conclusion.left, converse.conclusion.right) == (hyp.left, hyp.right)
        assert (conv_hyp.left, conv_hyp.right) == (
            forward.conclusion.left,
            forward.conclusion.right,
        )
        assert converse.variables == forward.variables

    def test_ngo_is_chain_against_reverse(self):
        inf = ngo(3)
        a = (Var("a1"), Var("a2"), Var("a3"))
        assert inf.conclusion == Eq(GodowskiChain(a), GodowskiChain(tuple(reversed(a))))

    def test_ngo_inference_cycle(self):
        inf = ngo_inference(3)
        assert len(inf.hypotheses) == 6
        assert inf.variables == ("a1", "b1", "a2", "b2", "a3", "b3")

    def test_godowski_small_cases(self):
        x, y = Var("x"), Var("y")
        assert godowski([x]) == One()
        assert godowski([x, y]) == Meet(Sasaki(x, y), Sasaki(y, x))

    def test_godowski_transitivity_size(self):
        assert godowski_transitivity(2, 4).variables == ("a1", "a2", "a3", "a4")
        assert godowski_transitivity(1, 2).variables == ("a1", "a2")

    def test_vector_state_families(self):
        assert e_n(3).variables[0] == "v"
        assert e_prime(3).variables[:2] == ("v", "r")
        assert len(e_one(3).variables) == 2 + 3 * 3

    def test_unknown_variants(self):
        with pytest.raises(BadParameterError):
            oa3_variant("z")
        with pytest.raises(BadParameterError):
            mge_derived("eq99")

    def test_every_family_generates(self):
        keys = [
            "oml", "modular", "distributive", "noa:3", "noainf:3", "noaid:3", "noaidconv:3",
            "oatrans:3",
            "ngo:3", "ngoinf:3", "goeq:c", "goeq:d", "goeq:e", "gojk:3:1:2", "gotrans:2:3",
            "mge:3go", "mge:ab+cd=ac+bd", "en:3", "eprime:3", "e1:3",
            *(f"oa3variant:{v}" for v in "abcdefghij"),
            *(f"mgederived:{v}" for v in MGE_DERIVED),
        ]
        names = set()
        for key in keys:
            inf = generate(key)
            assert inf.name == FamilyId.parse(key).key
            names.add(FamilyId.parse(key).name)
        assert names == set(FamilyName)

    def test_generate_accepts_family_id(self):
        assert generate(FamilyId.parse("noa:3")) == noa(3)


class TestVerdicts:
    @pytest.mark.parametrize("key", ["noa:3", "ngo:3", "mge:3go", "oml", "modular", "distributive"])
    def test_boolean_passes_everything(self, key: str):
        assert check(boolean(4), generate(key), make_strategy()).holds

    @pytest.mark.parametrize("key", ["noa:3", "ngo:3", "oml"])
    def test_o6_fails(self, key: str):
        verdict = check(o6(), generate(key), make_strategy())
        assert verdict.falsified
        assert verdict.counterexample is not None

    @pytest.mark.parametrize("key", ["noaid:3", "noaidconv:3"])
    def test_identity_law_both_directions_in_modular_lattices(self, key: str):
        for lat in (mo2(), boolean(3)):
            assert check(lat, generate(key), make_strategy()).holds, lat.name

    def test_mo2_is_modular_not_distributive(self):
        lat = mo2()
        assert check(lat, generate("modular"), make_strategy()).holds
        assert check(lat, generate("distributive"), make_strategy()).falsified

    def test_thirteen_seven(self):
        lat = make_lattice()
        assert check(lat, generate("oml"), make_strategy()).holds
        assert check(lat, generate("noa:3"), make_strategy()).falsified
