import random
from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.errors import NotGreechieBackedError
from src.lattice import boolean, chain2, mo2, o6
from src.models.enums import LPStatus
from src.models.states import StateWitness
from src.states import (
    admits_state,
    fourier_motzkin_optimum,
    simplex_solve,
    state_polytope,
    state_violations,
    verify_state,
)
from tests.factories import make_lattice


class TestStatePolytope:
    def test_blocks_encoding(self):
        lat = make_lattice()
        polytope = state_polytope(lat)
        assert polytope.by_blocks
        assert len(polytope.problem.variables) == 13
        assert len(polytope.problem.rows) == 7
        assert all(row.label.startswith("block ") for row in polytope.problem.rows)

    def test_coatom_form_is_its_block_complement(self):
        lat = make_lattice()
        polytope = state_polytope(lat)
        coatom = lat.ortho(lat.atom("4"))
        column = polytope.problem.variables.index
        assert set(polytope.form(coatom)) == {column("3"), column("5")}

    def test_elements_encoding_on_request(self):
        lat = mo2()
        polytope = state_polytope(lat, "elements")
        assert not polytope.by_blocks
        assert len(polytope.problem.variables) == lat.size
        assert polytope.problem.variables[1] == "m[x]"

    def test_o6_falls_back_to_elements(self):
        assert not state_polytope(o6()).by_blocks

    def test_o6_blocks_request_fails(self):
        with pytest.raises(NotGreechieBackedError):
            state_polytope(o6(), "blocks")

    @pytest.mark.parametrize("encoding", ["blocks", "elements"])
    def test_uniform_point_fits_only_block_encoding(self, encoding):
        polytope = state_polytope(boolean(2), encoding)
        assert polytope.problem.satisfied_by(
            [Fraction(1, 2)] * len(polytope.problem.variables)
        ) == (encoding == "blocks")


_BLOCK_DIAGRAMS = ["12.", "123.", "12,34.", "123,45.", "123,345.", "123,456.", "1234,456."]


def _block_lattices() -> list:
    return [make_lattice(text, name=text) for text in _BLOCK_DIAGRAMS] + [mo2(), boolean(3)]


def _element_lattices() -> list:
    return [o6(), mo2(), boolean(2), boolean(3), chain2(), make_lattice("12,34.", name="12,34.")]


class TestAgainstFourierMotzkin:
    """Random objectives over small state polytopes, simplex against elimination."""

    CASES = [("blocks", lat) for lat in _block_lattices()] + [
        ("elements", lat) for lat in _element_lattices()
    ]

    @pytest.mark.parametrize("seed", range(100))
    def test_optimum_agrees(self, seed):
        rng = random.Random(seed)
        encoding, lattice = self.CASES[seed % len(self.CASES)]
        problem = state_polytope(lattice, encoding).problem
        objective = {j: rng.randint(-3, 3) for j in range(len(problem.variables))}
        problem = problem.with_objective(objective, maximize=rng.random() < 0.5)
        result = simplex_solve(problem)
        status, value = fourier_motzkin_optimum(problem)
        assert result.status == status == LPStatus.OPTIMAL
        assert result.value == value
        assert problem.satisfied_by(result.point)

    def test_covers_both_encodings_on_six_atoms_or_fewer(self):
        assert {encoding for encoding, _ in self.CASES} == {"blocks", "elements"}
        for encoding, lattice in self.CASES:
            if encoding == "blocks":
                assert len(lattice.structure.atoms) <= 6


class TestVerifyState:
    @pytest.mark.parametrize(
        "lattice", [o6(), mo2(), boolean(3), make_lattice()], ids=lambda lat: lat.name
    )
    def test_solver_witness_is_a_state(self, lattice):
        report = admits_state(lattice)
        assert report.exists
        assert verify_state(lattice, report.witness.elements)

    def test_violations_are_named(self):
        lat = mo2()
        values = list(admits_state(lat).witness.elements)
        values[0] = Fraction(1, 2)
        problems = state_violations(lat, values)
        assert "m(0) != 0" in problems
        assert not verify_state(lat, values)

    def test_wrong_length(self):
        assert state_violations(mo2(), [Fraction(0)] * 3) == ["expected 6 values, got 3"]

    def test_non_additive_valuation(self):
        lat = boolean(2)
        one_atom = lat.atom("a")
        values = [Fraction(0)] * lat.size
        values[lat.one] = Fraction(1)
        values[one_atom] = Fraction(1, 4)
        values[lat.ortho(one_atom)] = Fraction(1, 4)
        assert any("not additive" in p for p in state_violations(lat, values))


class TestRational:
    def test_serializes_as_p_over_q(self):
        witness = StateWitness(atoms={"a": Fraction(1, 2)}, elements=[0, "1/3", Fraction(1)])
        assert witness.model_dump(mode="json") == {
            "atoms": {"a": "1/2"},
            "elements": ["0/1", "1/3", "1/1"],
        }

    def test_round_trip_through_json(self):
        witness = StateWitness(elements=[Fraction(2, 7)])
        assert StateWitness.model_validate_json(witness.model_dump_json()) == witness

    @pytest.mark.parametrize("bad", [True, "half", 0.5])
    def test_rejects_non_rationals(self, bad):
        with pytest.raises(ValidationError):
            StateWitness(elements=[bad])
