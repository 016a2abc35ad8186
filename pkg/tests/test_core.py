from fractions import Fraction

import pytest
from instances import K
from oracles import modified_degree, parts_of

from unihyper import (
    Hypergraph,
    InvalidIndexError,
    InvalidInputError,
    ParseError,
    degrees,
    emit_hypergraph,
    index_set,
    neighbor_multiplicity,
    parse_hypergraph,
    partitions2,
    standard_corpus,
    volume,
)
from unihyper.core import tau_size


def as_sets(pairs):
    return {frozenset((a, b)) for a, b in pairs}


class TestPartitions:
    def test_pair(self):
        assert as_sets(partitions2({1, 2})) == {frozenset({(1,), (2,)})}

    def test_triple(self):
        got = as_sets(partitions2({1, 2, 3}))
        assert got == {
            frozenset({(1,), (2, 3)}),
            frozenset({(2,), (1, 3)}),
            frozenset({(3,), (1, 2)}),
        }

    @pytest.mark.parametrize("m", range(2, 8))
    def test_count_matches_formula(self, m):
        # independent count: subsets holding the least element, minus the whole set
        brute = sum(1 for mask in range(1 << m) if mask & 1 and mask != (1 << m) - 1)
        assert len(partitions2(range(m))) == brute == tau_size(m)

    def test_four_set_has_seven(self):
        assert len(partitions2({1, 2, 3, 4})) == 7

    def test_empty_rejected(self):
        with pytest.raises(InvalidInputError):
            partitions2(set())


class TestIndexSet:
    def test_single_triple(self, triple):
        assert index_set(triple) == [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3)]
        assert triple.k == 6

    def test_triangle(self):
        assert index_set(K(3)) == [(1,), (2,), (3,)]

    def test_chain_example(self, chain6):
        assert chain6.k == 12

    def test_matches_definition(self, ten, fourteen, four):
        for H in (ten, fourteen, four):
            assert set(index_set(H)) == parts_of(H)
            assert len(index_set(H)) == len(set(index_set(H)))


class TestDegrees:
    def test_included_edge_subtracts(self):
        H = Hypergraph([(1, 2), (1, 2, 3)])
        t = degrees(H)
        assert t.d[H.position[(1, 2)]] == 2
        assert t.d_star[H.position[(1, 2)]] == 1

    def test_single_triple_all_one(self, triple):
        assert list(degrees(triple).d_star) == [1] * 6

    def test_isolated_vertex(self):
        H = Hypergraph([(1, 2)], [1, 2, 3])
        t = degrees(H)
        pos = H.position[(3,)]
        assert t.d[pos] == t.d_star[pos] == 0

    def test_against_definition(self, ten, fourteen):
        for H in (ten, fourteen):
            t = degrees(H)
            assert list(t.d_star) == [modified_degree(H, S) for S in H.index]

    def test_mean_is_exact(self):
        assert degrees(K(3)).mean_star == Fraction(2)


class TestNeighbourAndVolume:
    def test_partners(self, triple):
        assert neighbor_multiplicity(triple, (1,), (2, 3)) == 1
        assert neighbor_multiplicity(triple, (1,), (2,)) == 0

    def test_unknown_part(self, triple):
        with pytest.raises(InvalidIndexError):
            neighbor_multiplicity(triple, (1,), (4,))

    def test_volumes(self, triple):
        assert volume(triple, triple.index) == 6
        assert volume(K(3), K(3).index) == 6
        assert volume(Hypergraph([(1, 2)], [1, 2, 3]), [(3,)]) == 0

    def test_empty_collection(self, triple):
        with pytest.raises(InvalidInputError):
            volume(triple, [])


class TestModel:
    def test_multiplicity_accumulates(self):
        H = Hypergraph([(1, 2), (2, 1), (1, 2, 3)])
        assert H.multiplicity((1, 2)) == 2
        assert not H.is_simple

    def test_bad_multiplicity(self):
        with pytest.raises(InvalidInputError):
            Hypergraph({(1, 2): 0})

    def test_loops(self):
        H = Hypergraph({(1,): 2})
        assert not H.is_loopless
        assert H.k == 1


class TestFormat:
    def test_parse_chain(self, chain6):
        doc = parse_hypergraph("e 1 2 3\ne 3 4\ne 4 5 6\n")
        assert doc.hypergraph == chain6

    def test_parse_multiplicity(self):
        H = parse_hypergraph("e*2 1 2").hypergraph
        assert H.multiplicity((1, 2)) == 2

    def test_duplicate_member(self):
        with pytest.raises(ParseError):
            parse_hypergraph("e 1 1 2")

    def test_parse_error_carries_line(self):
        with pytest.raises(ParseError) as info:
            parse_hypergraph("e 1 2\ne 3 3")
        assert "2" in str(info.value)

    def test_round_trip_corpus(self):
        n = 0
        for H in standard_corpus():
            text = emit_hypergraph(H)
            assert parse_hypergraph(text).hypergraph == H
            assert emit_hypergraph(parse_hypergraph(text).hypergraph) == text
            n += 1
        assert n == 2419

    def test_round_trip_multiplicities(self):
        H = Hypergraph({(1, 2): 3, (2, 3, 4): 2, (5,): 1}, [6])
        assert parse_hypergraph(emit_hypergraph(H)).hypergraph == H
