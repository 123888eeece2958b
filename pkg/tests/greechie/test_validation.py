from src.families import fixtures
from src.greechie import find_loops, parse, validate
from src.models.diagram import Block, GreechieDiagram
from tests.factories import THIRTEEN_SEVEN, THIRTEEN_SEVEN_CHORD_BD5


def _failed(report) -> list[int]:
    return [c.condition for c in report.conditions if not c.passed]


class TestValidate:
    def test_thirteen_seven_passes(self):
        report = validate(parse(THIRTEEN_SEVEN))
        assert report.valid
        assert report.lattice_ok
        assert [c.condition for c in report.conditions] == [1, 2, 3, 4, 5]

    def test_triangle_fails_condition_five(self):
        report = validate(parse("123,345,561."))
        assert _failed(report) == [5]
        bad = report.conditions[4]
        assert bad.loop is not None
        assert bad.loop.order == 3
        assert bad.blocks == [0, 1, 2]

    def test_two_atom_block_touching_another(self):
        report = validate(parse("12,234."))
        assert _failed(report) == [3]
        assert report.conditions[2].blocks == [0]

    def test_blocks_sharing_two_atoms(self):
        report = validate(parse("123,124."))
        assert 4 in _failed(report)
        assert report.conditions[3].atoms == ["1", "2"]

    def test_single_atom_block_among_many(self):
        report = validate(parse("1,234."))
        assert _failed(report) == [2]

    def test_orphan_atom(self):
        d = GreechieDiagram(atoms=("1", "2", "3", "4"), blocks=(Block(atoms=("1", "2", "3")),))
        report = validate(d)
        assert _failed(report) == [1]
        assert report.conditions[0].atoms == ["4"]

    def test_square_is_valid_but_not_lattice(self):
        report = validate(parse("123,345,567,781."))
        assert report.valid
        assert not report.lattice_ok
        assert len(report.order4_loops) == 1

    def test_printed_chord_has_order_four_loops(self):
        report = validate(parse(THIRTEEN_SEVEN_CHORD_BD5))
        assert report.valid
        assert len(report.order4_loops) == 2

    def test_every_fixture_is_lattice_ok(self):
        for fixture in fixtures():
            assert validate(fixture.diagram).lattice_ok, fixture.id


class TestFindLoops:
    def test_square(self):
        loops = find_loops(parse("123,345,567,781."), 4)
        assert len(loops) == 1
        assert loops[0].order == 4
        assert sorted(loops[0].junction_atoms) == ["1", "3", "5", "7"]

    def test_thirteen_seven_has_no_short_loops(self):
        assert find_loops(parse(THIRTEEN_SEVEN), 4) == []

    def test_thirteen_seven_pentagons(self):
        loops = find_loops(parse(THIRTEEN_SEVEN), 5)
        assert len(loops) == 2
        assert all(lp.order == 5 for lp in loops)

    def test_single_block(self):
        assert find_loops(parse("123."), 4) == []

    def test_reversing_block_order_gives_same_loops(self):
        forward = parse("123,345,567,781.")
        backward = parse("781,567,345,123.")
        assert [lp.order for lp in find_loops(forward, 4)] == [
            lp.order for lp in find_loops(backward, 4)
        ]
        assert {frozenset(lp.junction_atoms) for lp in find_loops(forward, 4)} == {
            frozenset(lp.junction_atoms) for lp in find_loops(backward, 4)
        }

    def test_same_blocks_different_junctions(self):
        loops = find_loops(parse("1234,1235."), 2)
        assert [lp.blocks for lp in loops] == [(0, 1)] * 3
        assert {frozenset(lp.junction_atoms) for lp in loops} == {
            frozenset("12"),
            frozenset("13"),
            frozenset("23"),
        }

    def test_max_order_below_two(self):
        assert find_loops(parse("123,345,561."), 1) == []
