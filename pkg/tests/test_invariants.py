import json
import random
from fractions import Fraction

import networkx as nx
import pytest
from instances import C, K, P
from oracles import assoc_nx, brute_isomorphic, cheeger_brute, spanning_trees_dc

from unihyper import (
    INF,
    Hypergraph,
    SizeCapError,
    TruncationError,
    bound_suite,
    canonical_form,
    cheeger_constant,
    cospectral_scan,
    enumerate_exact_spanning_pairs,
    enumerate_hypergraphs,
    exact_spanning_pairs_count,
    is_isomorphic,
    subset_distance,
    verify_corpus,
)
from unihyper.assoc import build_associated_graph
from unihyper.invariants.bounds import fingerprint, json_value
from unihyper.invariants.spanning import spanning_tree_count_dc


class TestSpanning:
    def test_examples(self, triple):
        assert exact_spanning_pairs_count(K(2)) == 1
        assert exact_spanning_pairs_count(K(3)) == 3
        assert exact_spanning_pairs_count(triple) == 0

    def test_enumeration(self, triple):
        [(sub, D)] = enumerate_exact_spanning_pairs(K(2))
        assert sub == K(2) and D == (((1,), (2,)),)
        assert len(enumerate_exact_spanning_pairs(K(3))) == 3
        assert enumerate_exact_spanning_pairs(triple) == []

    def test_truncation_carries_count(self):
        with pytest.raises(TruncationError) as info:
            enumerate_exact_spanning_pairs(K(5), limit=10)
        assert info.value.count == 125

    def test_against_networkx_dc(self, four):
        for H in (four, K(4), C(5), Hypergraph([(1, 2, 3), (2, 3), (3, 4), (1, 4)])):
            assert exact_spanning_pairs_count(H) == spanning_trees_dc(assoc_nx(H))

    def test_internal_dc_matches(self):
        for H in enumerate_hypergraphs(4, 4, 3):
            assert spanning_tree_count_dc(build_associated_graph(H)) == spanning_trees_dc(assoc_nx(H))

    def test_pairs_are_distinct_trees(self, four):
        pairs = enumerate_exact_spanning_pairs(four)
        assert len({D for _, D in pairs}) == len(pairs) == exact_spanning_pairs_count(four)
        G = nx.Graph(assoc_nx(four))
        for _, D in pairs:
            assert nx.is_tree(nx.Graph(list(D))) and len(D) == G.number_of_nodes() - 1


class TestCheeger:
    def test_examples(self):
        assert cheeger_constant(K(2)).value == 1
        assert cheeger_constant(K(3)).value == 1

    def test_path_three(self):
        # every proper subset of I(P3) has ratio exactly 1
        assert cheeger_constant(P(3)).value == Fraction(1)
        assert cheeger_brute(P(3)) == 1

    def test_against_brute_force(self, four):
        for H in (four, P(5), C(5), K(4), Hypergraph([(1, 2), (1, 3), (2, 3), (1, 2, 3)])):
            r = cheeger_constant(H)
            assert r.value == cheeger_brute(H)
            assert r.value <= 1
            assert Fraction(r.cut, r.volume) == r.value

    def test_refusals(self, triple):
        with pytest.raises(SizeCapError):
            cheeger_constant(K(6), cap=5)
        with pytest.raises(Exception):
            cheeger_constant(triple)


class TestSubsetDistance:
    def test_examples(self, triple):
        assert subset_distance(K(3), [(1,)], [(1,), (2,)]) == 0
        assert subset_distance(K(3), [(1,)], [(2,), (3,)]) == 1
        assert subset_distance(triple, [(1,)], [(2,)]) == INF

    def test_path(self):
        assert subset_distance(P(5), [(1,)], [(4,), (5,)]) == 3


class TestEnumeration:
    @pytest.mark.parametrize("args,count", [((2, 2, 1), 2), ((3, 3, 1), 5), ((3, 3, None), 16)])
    def test_counts(self, args, count):
        assert sum(1 for _ in enumerate_hypergraphs(*args)) == count

    def test_iso_classes_n4(self):
        classes = list(enumerate_hypergraphs(4, 4, iso_reject=True))
        assert len({canonical_form(H) for H in classes}) == len(classes)
        # brute-force representatives over all 4! relabelings
        reps = []
        for H in enumerate_hypergraphs(4, 4):
            if not any(brute_isomorphic(H, R) for R in reps if len(R.edges) == len(H.edges)):
                reps.append(H)
        assert len(reps) == len(classes)

    def test_isomorphism_random_relabel(self):
        rng = random.Random(3)
        for H in enumerate_hypergraphs(4, 4, 4):
            perm = list(H.vertices)
            rng.shuffle(perm)
            f = dict(zip(H.vertices, perm))
            H2 = Hypergraph([[f[v] for v in e] for e, _ in H.edges], H.vertices)
            assert is_isomorphic(H, H2)

    def test_size_cap(self):
        with pytest.raises(SizeCapError):
            next(enumerate_hypergraphs(9, 2))

    def test_deterministic(self):
        a = [H.edges for H in enumerate_hypergraphs(4, 3, 2)]
        assert a == [H.edges for H in enumerate_hypergraphs(4, 3, 2)]


class TestCospectral:
    def test_graph_vs_triple(self, triple):
        three_k2 = Hypergraph([(1, 2), (3, 4), (5, 6)])
        cat = cospectral_scan([three_k2, triple], "U")
        assert len(cat.flagged) == 1
        assert cat.pairs() == [(three_k2, triple)]

    def test_p4_vs_triangle_plus_point(self):
        cat = cospectral_scan([P(4), Hypergraph([(1, 2), (2, 3), (1, 3)], [4])], "UL")
        assert cat.pairs() == []

    def test_singleton(self):
        cat = cospectral_scan([K(3)], "UQ")
        assert cat.flagged == [] and cat.to_dict()["groups"] == []

    def test_isomorphic_members_merge(self):
        cat = cospectral_scan([P(3), Hypergraph([(2, 3), (1, 3)])], "U")
        assert cat.flagged == []

    def test_normalized_exact(self):
        # K_{1,3} and C4 share the normalized spectrum {2, 1, 1, 0}
        star = Hypergraph([(1, 2), (1, 3), (1, 4)])
        cat = cospectral_scan([star, C(4)], "UNL")
        assert len(cat.pairs()) == 1

    def test_known_graph_pair(self):
        # K_{1,4} and C4 + K1 share the adjacency spectrum
        star = Hypergraph([(1, 2), (1, 3), (1, 4), (1, 5)])
        c4k1 = Hypergraph([(1, 2), (2, 3), (3, 4), (1, 4)], [5])
        assert len(cospectral_scan([star, c4k1], "U").pairs()) == 1
        assert cospectral_scan([star, c4k1], "UL").pairs() == []


class TestBoundSuite:
    def test_k3_cycle_record(self):
        rep = bound_suite(K(3))
        assert rep.record("signless.four_iff_cycle_or_claw").status == "pass"
        assert rep.record("signless.below_four_iff_exact_paths").status == "pass"

    def test_k2_cheeger(self):
        rep = bound_suite(K(2))
        for name in ("cheeger.lower_sandwich", "cheeger.upper_sandwich", "cheeger.sqrt_bound"):
            assert rep.record(name).status == "pass"

    def test_triple_trace(self, triple):
        r = bound_suite(triple).record("normalized.sum_equals_k_minus_trivial")
        assert r.status == "pass" and r.lhs == r.rhs == 6

    def test_same_records_everywhere(self, triple, four):
        names = [r.theorem for r in bound_suite(four).records]
        assert names == [r.theorem for r in bound_suite(triple).records]
        assert names == [r.theorem for r in bound_suite(Hypergraph({(1, 2): 2, (1,): 1})).records]

    def test_report_serializes(self, four):
        rep = bound_suite(four)
        data = json.loads(rep.to_json())
        assert data["fingerprint"] == fingerprint(four)
        assert len(data["records"]) == len(rep.records)

    def test_json_values(self):
        assert json_value(Fraction(3, 1)) == 3
        assert json_value(Fraction(1, 3)) == "1/3"
        assert json_value(float("inf")) == "inf"

    def test_collection_log_on_barbell(self, barbell):
        r = bound_suite(barbell).record("subset_distance.collection_log")
        assert r.applicable and r.status == "pass"

    def test_known_counterexamples(self):
        assert bound_suite(P(3)).record("laplacian.diameter_fiedler_upper").status == "fail"
        assert bound_suite(K(3)).record("discrepancy.self_pairs").status == "fail"
        r = bound_suite(Hypergraph([(1, 2), (2, 3), (2, 4), (2, 3, 4)])).record("subset_distance.collection_shifted")
        assert r.status == "fail"

    def test_audit_only_for_deeply_uni(self):
        rep = bound_suite(K(2))
        r = rep.record("connectivity.deeply_implies_uni")
        assert r.audit and r.status == "audit-fail"
        assert r not in rep.hard_failures

    def test_small_corpus_summary(self):
        out = verify_corpus(enumerate_hypergraphs(3, 3))
        assert out["instances"] == 16
        assert out["summary"]["applicable"] >= out["summary"]["passed"]
        assert set(out["theorems"]) == {r.theorem for r in bound_suite(K(3)).records}
