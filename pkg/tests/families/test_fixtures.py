import pytest

from src.checker import check
from src.errors import BadParameterError, FixtureError
from src.families import (
    MGE_CORPUS,
    fixture_ids,
    fixtures,
    generate,
    load_fixture,
    parse_manifest,
    resolve_mge,
)
from src.lattice import build
from src.models.enums import Outcome
from tests.factories import make_strategy


class TestFixtures:
    def test_sixteen_in_manifest_order(self):
        ids = fixture_ids()
        assert len(ids) == 16
        assert ids[0] == "13-7-OMLp-oa3f"
        assert sum(i.startswith("35-23") for i in ids) == 5
        assert sum(i.startswith("36-24") for i in ids) == 5
        assert sum(i.startswith("39-26") for i in ids) == 5

    def test_first_fixture(self):
        first = fixtures()[0]
        assert len(first.diagram.atoms) == 13
        subjects = {c.subject: c.outcome for c in first.claims}
        assert subjects == {
            "oml": Outcome.PASS,
            "noa:3": Outcome.FAIL,
            "strong-quantum": Outcome.PASS,
        }

    def test_large_fixture_claims(self):
        claims = {c.subject: c.outcome for c in load_fixture("39-26-oa5p6f#5").claims}
        assert claims["noa:6"] == Outcome.FAIL
        assert claims["noa:5"] == Outcome.PASS

    @pytest.mark.parametrize(
        "fixture_id, size",
        [("35-23-oa5p6f#1", 72), ("36-24-oa5p6f#3", 74), ("39-26-oa5p6f#2", 80)],
    )
    def test_lattice_sizes(self, fixture_id: str, size: int):
        lat = build(load_fixture(fixture_id).diagram, name=fixture_id)
        assert lat.size == size

    def test_unknown_fixture(self):
        with pytest.raises(FixtureError):
            load_fixture("99-99")


class TestParseManifest:
    def test_records(self):
        text = "# header\nid: x\nfile: x.txt\n---\nid: y\nfile: y.txt\n"
        assert parse_manifest(text) == [
            {"id": "x", "file": "x.txt"},
            {"id": "y", "file": "y.txt"},
        ]

    def test_keys_are_lowercased(self):
        assert parse_manifest("ID: x") == [{"id": "x"}]

    def test_bad_line(self):
        with pytest.raises(FixtureError):
            parse_manifest("id x")


class TestCorpus:
    def test_named_equation(self):
        eq = resolve_mge("3go")
        assert len(eq.lhs) == 3
        assert eq.balanced

    def test_literal_equation(self):
        assert resolve_mge("ab+cd=ac+bd").variables == ["a", "b", "c", "d"]

    def test_unknown_name(self):
        with pytest.raises(BadParameterError):
            resolve_mge("nothing")

    def test_every_corpus_entry_parses(self):
        for name in MGE_CORPUS:
            assert resolve_mge(name).balanced


@pytest.mark.slow
class TestLargeFixtureClaims:
    def test_six_oa_inference_fails(self):
        fixture = load_fixture("35-23-oa5p6f#1")
        lat = build(fixture.diagram, name=fixture.id)
        assert check(lat, generate("noainf:6"), make_strategy()).falsified

    def test_oml_holds_everywhere(self):
        for fixture in fixtures():
            lat = build(fixture.diagram, name=fixture.id)
            assert check(lat, generate("oml"), make_strategy()).holds, fixture.id
