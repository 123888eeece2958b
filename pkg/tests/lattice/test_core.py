import pickle

import pytest

from src.errors import IndexOutOfRangeError, InvalidDiagramError, NotALatticeError
from src.greechie import parse
from src.lattice import Lattice, boolean, build, mo2
from tests.factories import THIRTEEN_SEVEN_CHORD_BD5, make_lattice


class TestBuild:
    def test_thirteen_seven_size(self):
        lat = make_lattice()
        assert lat.size == 28
        assert len(lat.atoms()) == 13
        assert lat.structure is not None
        assert len(lat.structure.blocks) == 7

    def test_size_is_two_plus_twice_atoms(self):
        lat = build(parse("123,345,567,789,9AB."))
        assert lat.size == 2 + 2 * 11

    def test_mo2_skeleton(self):
        lat = build(parse("12,34."))
        assert lat.size == 6
        assert sorted(lat.labels) == sorted(["0", "1", "2", "3", "4", "1"])

    def test_single_block_is_boolean(self):
        lat = build(parse("123."))
        assert lat.size == 8
        assert lat.meet(lat.atom("1"), lat.atom("2")) == lat.zero

    def test_single_atom_is_chain(self):
        lat = build(parse("1."))
        assert lat.size == 2
        assert lat.atom("1") == lat.one

    def test_square_is_not_a_lattice(self):
        with pytest.raises(NotALatticeError) as exc_info:
            build(parse("123,345,567,781."))
        assert sorted(exc_info.value.loop) == ["1", "3", "5", "7"]

    def test_printed_thirteen_seven_chord_is_not_a_lattice(self):
        with pytest.raises(NotALatticeError):
            build(parse(THIRTEEN_SEVEN_CHORD_BD5))

    def test_invalid_diagram(self):
        with pytest.raises(InvalidDiagramError) as exc_info:
            build(parse("123,345,561."))
        assert not exc_info.value.report.valid

    def test_poset_without_unique_join(self):
        # a, b both below c and d: neither c nor d is least
        below = [0b1, 0b11, 0b101, 0b1111, 0b10111, 0b111111]
        with pytest.raises(NotALatticeError) as exc_info:
            Lattice(["0", "a", "b", "c", "d", "1"], below, [5, 2, 1, 4, 3, 0])
        assert exc_info.value.pair is not None

    def test_bottom_and_top_required(self):
        with pytest.raises(NotALatticeError):
            Lattice(["0", "1"], [0b11, 0b11], [1, 0])


class TestOperations:
    def test_atoms_in_one_block_are_orthogonal(self):
        lat = make_lattice()
        one, two = lat.atom("1"), lat.atom("2")
        assert lat.leq(one, lat.ortho(two))
        assert lat.orthogonal(one, two)

    def test_atoms_in_different_blocks(self):
        lat = make_lattice()
        one, six = lat.atom("1"), lat.atom("6")
        assert not lat.orthogonal(one, six)
        assert lat.meet(one, six) == lat.zero
        assert lat.join(one, six) == lat.one

    def test_block_complement(self):
        lat = make_lattice()
        one, two, three = lat.atom("1"), lat.atom("2"), lat.atom("3")
        assert lat.join(one, two) == lat.ortho(three)
        assert lat.label(lat.ortho(three)) == "3'"

    def test_shared_coatom(self):
        # 3' is both {1,2} in block 123 and {4,5} in block 345
        lat = make_lattice()
        one, four = lat.atom("1"), lat.atom("4")
        assert lat.join(one, four) == lat.ortho(lat.atom("3"))

    def test_ortho_is_involution(self):
        lat = make_lattice()
        assert all(lat.ortho(lat.ortho(x)) == x for x in range(lat.size))

    def test_index_out_of_range(self):
        lat = mo2()
        with pytest.raises(IndexOutOfRangeError) as exc_info:
            lat.meet(0, 6)
        assert exc_info.value.size == 6

    def test_index_and_atom_lookup(self):
        lat = mo2()
        assert lat.index("y'") == 4
        assert lat.atom("x'") == 2
        with pytest.raises(KeyError):
            lat.index("z")
        with pytest.raises(KeyError):
            lat.atom("z")

    def test_orth_neighbors(self):
        lat = mo2()
        assert lat.orth_neighbors(1) == (0, 2)
        assert lat.orth_neighbors(0) == tuple(range(6))

    def test_sasaki_and_equiv_in_boolean(self):
        lat = boolean(2)
        a, b = 1, 2
        assert lat.sasaki_table[a][b] == b
        assert lat.equiv_table[a][a] == lat.one
        assert lat.equiv_table[a][b] == lat.zero

    def test_covers(self):
        lat = mo2()
        assert len(lat.covers()) == 8
        assert (0, 1) in lat.covers()
        assert (1, 5) in lat.covers()


class TestIdentity:
    def test_digest_is_stable(self):
        assert make_lattice().digest == make_lattice().digest

    def test_digest_differs(self):
        assert make_lattice().digest != mo2().digest

    def test_dump_table_header(self):
        text = mo2().dump_table()
        assert text.startswith("elements 6\n0 0 5\n")
        assert "leq\n" in text

    def test_pickle_round_trip(self):
        lat = make_lattice()
        copy = pickle.loads(pickle.dumps(lat))
        assert copy.meet_table == lat.meet_table
        assert copy.structure == lat.structure
        assert copy.digest == lat.digest
