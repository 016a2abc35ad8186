import numpy as np
import pytest
import sympy
from instances import K, P
from oracles import modified_degree, unified_entries

from unihyper import (
    Hypergraph,
    UnsupportedStructureError,
    arc_incidence,
    edge_parts_incidence,
    matrix_of_kind,
    standard_corpus,
    unified_degree_matrix,
    unified_laplacian,
    unified_matrix,
    unified_normalized_laplacian,
    unified_signless_laplacian,
)
from unihyper.matrices import is_totally_unimodular


def mat(M):
    return [list(r) for r in M.exact()]


def block_pairs(M):
    """Unordered index pairs holding a nonzero off-diagonal entry."""
    rows = M.exact()
    return {(i, j) for i in range(len(rows)) for j in range(i + 1, len(rows)) if rows[i][j]}


class TestUnified:
    def test_graph_adjacency(self):
        assert mat(unified_matrix(K(3))) == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]

    def test_single_triple(self, triple):
        U = unified_matrix(triple)
        assert np.all(np.diag(U.data) == 0)
        assert U.data.sum() == 6
        assert block_pairs(U) == {(0, 5), (1, 4), (2, 3)}

    def test_loop_diagonal(self):
        assert mat(unified_matrix(Hypergraph({(1,): 2}))) == [[2]]

    def test_matches_definition(self, ten, fourteen, four):
        for H in (ten, fourteen, four, Hypergraph({(1, 2): 2, (1, 2, 3): 3, (2,): 1})):
            idx, U = unified_entries(H)
            assert list(H.index) == idx
            assert mat(unified_matrix(H)) == [[U[a, b] for b in idx] for a in idx]


class TestDegreeAndLaplacian:
    def test_degree_diagonals(self, triple):
        assert mat(unified_degree_matrix(triple)) == np.eye(6, dtype=int).tolist()
        assert np.diag(unified_degree_matrix(K(3)).data).tolist() == [2, 2, 2]
        iso = Hypergraph([(1, 2)], [1, 2, 3])
        assert unified_degree_matrix(iso).data[2, 2] == 0

    def test_k2(self):
        assert mat(unified_laplacian(K(2))) == [[1, -1], [-1, 1]]
        assert mat(unified_signless_laplacian(K(2))) == [[1, 1], [1, 1]]

    def test_rows_sum_to_zero(self, ten, fourteen, chain6):
        for H in (ten, fourteen, chain6):
            assert not unified_laplacian(H).data.sum(axis=1).any()

    def test_degree_is_row_sum(self):
        for H in standard_corpus():
            U = unified_matrix(H).data
            assert U.sum(axis=1).tolist() == [modified_degree(H, S) for S in H.index]

    def test_kinds(self, triple):
        for kind in ("U", "UD", "UL", "UQ", "UNL"):
            assert matrix_of_kind(triple, kind).order == 6
        assert matrix_of_kind(triple, "UNL").scalar == "float"

    def test_loops_keep_zero_row_sums(self):
        L = unified_laplacian(Hypergraph({(1,): 2, (1, 2): 1, (1, 2, 3): 1}))
        assert not L.data.sum(axis=1).any()


class TestNormalized:
    def test_k2(self):
        assert np.allclose(unified_normalized_laplacian(K(2)).data, [[1, -1], [-1, 1]])

    def test_isolated_row_is_zero(self):
        N = unified_normalized_laplacian(Hypergraph([(1, 2)], [1, 2, 3])).data
        assert not N[2].any() and not N[:, 2].any()

    def test_against_sympy(self, four):
        L = sympy.Matrix(mat(unified_laplacian(four)))
        D = sympy.diag(*[sympy.sqrt(x) ** -1 for x in unified_degree_matrix(four).data.diagonal().tolist()])
        ref = np.array((D * L * D).evalf(), dtype=float)
        assert np.allclose(unified_normalized_laplacian(four).data, ref, atol=1e-12)


class TestIncidence:
    def test_k2_arc(self):
        R = arc_incidence(K(2))
        col = [r[0] for r in R.exact()]
        assert sorted(col) == [-1, 1]
        assert [[sum(a * b for a, b in zip(r1, r2)) for r2 in R.exact()] for r1 in R.exact()] == [[1, -1], [-1, 1]]

    @pytest.mark.parametrize("name", ["triple", "ten", "four", "fourteen"])
    def test_products(self, name, request):
        H = request.getfixturevalue(name)
        R = sympy.Matrix(arc_incidence(H).exact())
        B = sympy.Matrix(edge_parts_incidence(H).exact())
        assert R * R.T == sympy.Matrix(mat(unified_laplacian(H)))
        assert B * B.T == sympy.Matrix(mat(unified_signless_laplacian(H)))
        assert all(sum(1 for x in B.col(j) if x) == 2 for j in range(B.cols))

    def test_path_rank(self):
        assert sympy.Matrix(arc_incidence(P(3)).exact()).rank() == 2

    def test_non_simple_rejected(self):
        with pytest.raises(UnsupportedStructureError):
            arc_incidence(Hypergraph({(1, 2): 2}))
        with pytest.raises(UnsupportedStructureError):
            edge_parts_incidence(Hypergraph({(1, 2): 2}))

    def test_bipartite_total_unimodularity(self, triple):
        for H in (triple, P(4), Hypergraph([(1, 2), (2, 3), (3, 4), (1, 4)])):
            B = edge_parts_incidence(H).exact()
            assert is_totally_unimodular(B)
            assert brute_tu(B)

    def test_odd_cycle_not_unimodular(self):
        B = edge_parts_incidence(K(3)).exact()
        assert not is_totally_unimodular(B)
        assert not brute_tu(B)


def brute_tu(rows):
    from itertools import combinations

    m, n = len(rows), len(rows[0])
    for s in range(1, min(m, n) + 1):
        for ri in combinations(range(m), s):
            for ci in combinations(range(n), s):
                if sympy.Matrix([[rows[i][j] for j in ci] for i in ri]).det() not in (-1, 0, 1):
                    return False
    return True
