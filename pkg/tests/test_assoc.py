import networkx as nx
import pytest
from instances import K
from oracles import assoc_nx

from unihyper import (
    Hypergraph,
    UnsupportedStructureError,
    build_associated_graph,
    de_components,
    exact_subhypergraph,
    standard_corpus,
)
from unihyper.errors import InvalidInduceSetError


def edge_multiset(G):
    return sorted((G.nodes[a], G.nodes[b], c) for (a, b), c in G.multiplicity.items())


class TestAssociatedGraph:
    def test_graph_is_fixed_point(self):
        G = build_associated_graph(K(3))
        assert G.nodes == ((1,), (2,), (3,))
        assert sorted(G.multiplicity.values()) == [1, 1, 1]

    def test_single_triple(self, triple):
        G = build_associated_graph(triple)
        assert edge_multiset(G) == [((1,), (2, 3), 1), ((2,), (1, 3), 1), ((3,), (1, 2), 1)]

    def test_chain_sizes(self, chain6):
        G = build_associated_graph(chain6)
        assert G.order == 12
        assert G.size == 7

    def test_loop_rejected(self):
        with pytest.raises(UnsupportedStructureError, match="loop"):
            build_associated_graph(Hypergraph([(1,), (1, 2)]))

    def test_multiplicity_carries(self):
        G = build_associated_graph(Hypergraph({(1, 2): 3}))
        assert G.c(0, 1) == 3

    def test_matches_oracle_on_corpus(self):
        for H in standard_corpus():
            G = build_associated_graph(H)
            ours = sorted(tuple(sorted((G.nodes[a], G.nodes[b]))) for a, b in G.to_networkx().edges())
            ref = assoc_nx(H)
            assert list(G.nodes) == sorted(ref.nodes, key=lambda p: (len(p), p))
            assert ours == sorted(tuple(sorted(e)) for e in ref.edges())


class TestDEComponents:
    def test_chain_literal(self, chain6):
        # the three-edge instance as written splits {5}, {6} apart
        classes = {c.members for c in de_components(chain6).classes}
        assert classes == {
            ((1,), (2, 3)),
            ((2,), (1, 3)),
            ((3,), (4,), (1, 2), (5, 6)),
            ((5,), (4, 6)),
            ((6,), (4, 5)),
        }

    def test_chain_with_closing_pair(self):
        # adding {5,6} yields the four classes listed for the worked example
        H = Hypergraph([(1, 2, 3), (3, 4), (4, 5, 6), (5, 6)])
        classes = {c.members for c in de_components(H).classes}
        assert classes == {
            ((1,), (2, 3)),
            ((2,), (1, 3)),
            ((3,), (4,), (1, 2), (5, 6)),
            ((5,), (6,), (4, 5), (4, 6)),
        }

    def test_deeply_connected_single_class(self, four):
        assert de_components(four).count == 1

    def test_single_triple(self, triple):
        P = de_components(triple)
        assert P.count == 3
        assert P.trivial_count == 0
        assert P.bipartite_nontrivial_count == 3

    def test_grouped_merges_equal_subhypergraphs(self, triple):
        grouped = de_components(triple).grouped()
        assert [c for _, c in grouped] == [3]

    def test_counts_match_networkx(self):
        for H in standard_corpus():
            assert de_components(H).count == nx.number_connected_components(assoc_nx(H))


class TestExactSubhypergraph:
    def test_triple_class(self, triple):
        sub = exact_subhypergraph(triple, [(1,), (2, 3)])
        assert sub == Hypergraph([(1, 2, 3)])

    def test_graph_induced(self):
        H = Hypergraph([(1, 2), (2, 3), (3, 4), (1, 4)])
        sub = exact_subhypergraph(H, [(1,), (2,), (3,)])
        assert sub == Hypergraph([(1, 2), (2, 3)])

    def test_closing_class(self):
        H = Hypergraph([(1, 2, 3), (3, 4), (4, 5, 6), (5, 6)])
        sub = exact_subhypergraph(H, [(5,), (6,), (4, 5), (4, 6)])
        assert sub == Hypergraph([(4, 5, 6), (5, 6)])

    def test_bad_induce_set(self, triple):
        with pytest.raises(InvalidInduceSetError):
            exact_subhypergraph(triple, [(1,), (1, 2)])
        with pytest.raises(InvalidInduceSetError):
            exact_subhypergraph(triple, [(4,)])
