import pytest

from src.lattice import boolean, builtin, check_property, mo2, o6, summarize
from src.models.enums import LatticeProperty
from tests.factories import make_lattice


class TestCheckProperty:
    def test_o6_is_ortholattice_not_orthomodular(self):
        lat = o6()
        assert check_property(lat, LatticeProperty.ORTHOLATTICE).holds
        report = check_property(lat, "orthomodular")
        assert not report.holds
        assert report.witness_labels == ["a", "b"]

    def test_mo2_modular_not_distributive(self):
        lat = mo2()
        assert check_property(lat, "modular").holds
        assert not check_property(lat, "distributive").holds

    def test_boolean_is_distributive(self):
        assert check_property(boolean(3), "distributive").holds

    def test_thirteen_seven_is_orthomodular(self):
        assert check_property(make_lattice(), "orthomodular").holds

    def test_o6_is_atomic_not_atomistic(self):
        lat = o6()
        assert check_property(lat, "atomic").holds
        report = check_property(lat, "atomistic")
        assert not report.holds
        assert report.witness_labels == ["b"]

    def test_superposition_in_mo2(self):
        assert check_property(mo2(), "superposition-a").holds
        assert not check_property(boolean(2), "superposition-a").holds

    def test_minimal_length(self):
        assert check_property(boolean(4), "minimal-length").holds
        assert not check_property(boolean(3), "minimal-length").holds
        report = check_property(mo2(), "minimal-length")
        assert not report.holds
        assert report.witness == []

    def test_complete_has_note(self):
        report = check_property(o6(), "complete")
        assert report.holds
        assert report.note

    def test_unknown_property(self):
        with pytest.raises(ValueError):
            check_property(o6(), "sparkly")

    @pytest.mark.parametrize("name", ["MO2", "Boolean:2", "Boolean:3", "Chain2"])
    def test_greechie_backed_builtins_are_orthomodular(self, name: str):
        assert check_property(builtin(name), "orthomodular").holds


class TestSummarize:
    def test_lists_every_property(self):
        summary = summarize(mo2())
        assert summary.size == 6
        assert summary.atoms == 4
        assert summary.blocks == 2
        assert [p.property for p in summary.properties] == list(LatticeProperty)

    def test_o6_has_no_blocks(self):
        assert summarize(o6()).blocks is None
