import pytest

from src.checker import build_plan, enumerate_assignments, naive_assignments
from src.checker.plan import Walker
from src.families.generators import distributive_law, ngo_inference, noa_inference, oml_law
from src.lattice import boolean, mo2, o6
from src.models.enums import VariableOrder
from src.terms import Eq, Equality, Inference, Join, Meet, Orthogonal, Var
from tests.factories import make_lattice


def _key(assignment: dict[str, int]) -> tuple[tuple[str, int], ...]:
    return tuple(sorted(assignment.items()))


def _aliased() -> Inference:
    a, b, c = Var("a"), Var("b"), Var("c")
    return Inference(
        (Equality(a, b), Orthogonal(a, c)),
        Eq(Meet(b, c), Meet(a, c)),
        ("a", "b", "c"),
        name="aliased",
    )


def _term_hypotheses() -> Inference:
    a, b, c = Var("a"), Var("b"), Var("c")
    return Inference(
        (Orthogonal(a, Join(b, c)), Equality(Meet(a, b), Meet(b, c))),
        Eq(a, a),
        ("a", "b", "c"),
        name="term-hyps",
    )


def _self_orthogonal() -> Inference:
    a, b = Var("a"), Var("b")
    return Inference((Orthogonal(a, a),), Eq(Join(a, b), b), ("a", "b"), name="self")


class TestBuildPlan:
    def test_given_order_keeps_variable_list(self):
        plan = build_plan(o6(), noa_inference(4), VariableOrder.GIVEN)
        assert plan.order == ["a0", "b0", "a1", "b1", "a2", "b2"]

    def test_most_constrained_is_a_permutation(self):
        inf = noa_inference(4)
        plan = build_plan(o6(), inf)
        assert sorted(plan.order) == sorted(inf.variables)

    def test_orthogonal_pairs_become_links(self):
        plan = build_plan(o6(), noa_inference(3), VariableOrder.GIVEN)
        assert plan.orth_links[1] == [0]
        assert plan.orth_links[3] == [2]
        assert plan.orth_links[0] == []

    def test_equal_variables_share_a_slot(self):
        plan = build_plan(o6(), _aliased())
        assert plan.aliases["b"] == "a"
        assert "b" not in plan.order
        assignment = plan.assignment([3, 0])
        assert assignment["a"] == assignment["b"]

    def test_self_orthogonal_variable(self):
        plan = build_plan(o6(), _self_orthogonal(), VariableOrder.GIVEN)
        assert plan.self_orthogonal == [True, False]

    def test_conclusion_kind(self):
        assert build_plan(o6(), oml_law()).kind == "eq"
        assert build_plan(o6(), noa_inference(3)).kind == "leq"


# Naive product size above which a pair is left out of the cross-check.
_NAIVE_LIMIT = 100_000


def _enumeration_cases() -> list:
    lattices = [o6(), mo2(), boolean(2), boolean(3), boolean(4), make_lattice()]
    inferences = [
        noa_inference(3),
        ngo_inference(3),
        ngo_inference(4),
        _aliased(),
        _term_hypotheses(),
        _self_orthogonal(),
        oml_law(),
    ]
    return [
        pytest.param(lat, inf, id=f"{lat.name}-{inf.name}")
        for lat in lattices
        for inf in inferences
        if lat.size ** len(inf.variables) <= _NAIVE_LIMIT
    ]


class TestEnumeration:
    @pytest.mark.parametrize(("lattice", "inference"), _enumeration_cases())
    def test_pruned_walk_matches_naive_product(self, lattice, inference):
        walked = sorted(_key(a) for a in enumerate_assignments(lattice, inference))
        naive = sorted(_key(a) for a in naive_assignments(lattice, inference))
        assert walked == naive

    def test_given_order_enumerates_same_set(self):
        lat, inf = mo2(), noa_inference(3)
        default = {_key(a) for a in enumerate_assignments(lat, inf)}
        given = {_key(a) for a in enumerate_assignments(lat, inf, VariableOrder.GIVEN)}
        assert default == given

    def test_self_orthogonal_only_bottom(self):
        values = {a["a"] for a in enumerate_assignments(o6(), _self_orthogonal())}
        assert values == {0}


class TestWalker:
    def test_unpruned_walk_examines_full_product(self):
        lat = boolean(3)
        walker = Walker(build_plan(lat, distributive_law()), prune=False)
        walker.run(lambda _: False)
        assert walker.stats.examined == lat.size**3
        assert walker.stats.pruned == 0

    def test_pruning_skips_subtrees(self):
        lat = boolean(3)
        walker = Walker(build_plan(lat, distributive_law()))
        walker.run(lambda _: False)
        assert walker.stats.pruned > 0
        assert walker.stats.examined < lat.size**3

    def test_leaf_returning_true_stops(self):
        walker = Walker(build_plan(boolean(2), distributive_law()), prune=False)
        seen: list[list[int]] = []

        def leaf(values: list[int]) -> bool:
            seen.append(list(values))
            return len(seen) == 3

        assert walker.run(leaf) is True
        assert len(seen) == 3

    def test_first_restricts_depth_zero(self):
        lat = boolean(2)
        walker = Walker(build_plan(lat, distributive_law(), VariableOrder.GIVEN), prune=False)
        firsts: set[int] = set()

        def leaf(values: list[int]) -> bool:
            firsts.add(values[0])
            return False

        walker.run(leaf, first=2)
        assert firsts == {2}
        assert walker.stats.examined == lat.size**2
