"""Exact spanning pairs: counting by cofactor and enumeration via spanning trees of G_H."""
from __future__ import annotations

import math
from functools import lru_cache

from ..assoc import AssociatedGraph, _UnionFind, build_associated_graph
from ..core import Hypergraph, make_part
from ..errors import (
    NumericalDisagreementError,
    TruncationError,
    UnsupportedStructureError,
)
from ..matrices import unified_laplacian
from ..spectra import cofactor_exact, eigenvalues_sym

PRODUCT_RTOL = 1e-6


def _require_simple(H: Hypergraph):
    if not H.is_simple:
        raise UnsupportedStructureError("exact spanning pairs are defined for simple hypergraphs only")


def exact_spanning_pairs_count(H: Hypergraph, check: bool = True) -> int:
    """Cofactor (0, 0) of U^L.

    With ``check`` the value is compared with (1/k) times the product of the
    k - 1 largest Laplacian eigenvalues; a disagreement raises.
    """
    _require_simple(H)
    L = unified_laplacian(H)
    count = cofactor_exact(L, 0, 0) if H.k > 1 else 1
    if check and count > 0 and H.k > 1:
        vals = eigenvalues_sym(L).values
        approx = math.prod(vals[: H.k - 1]) / H.k
        if abs(approx - count) > PRODUCT_RTOL * count:
            raise NumericalDisagreementError(
                f"eigenvalue product {approx!r} disagrees with cofactor {count}"
            )
    return count


def spanning_tree_count_dc(G: AssociatedGraph) -> int:
    """Spanning trees of a multigraph by deletion-contraction.

    Independent of any matrix: parallel edges are handled as bundles
    (t(G) = t(G - b) + c * t(G / b)), and pendant vertices are peeled off.
    """
    edges = {}
    for (i, j), c in G.multiplicity.items():
        edges[(i, j)] = c
    return _dc(frozenset(range(G.order)), frozenset(edges.items()))


@lru_cache(maxsize=200_000)
def _dc(nodes: frozenset, edges: frozenset) -> int:
    if len(nodes) == 1:
        return 1
    mult = dict(edges)
    factor = 1
    # peel pendant vertices: a vertex with one bundle of c edges contributes c
    while True:
        if len(nodes) == 1:
            return factor
        deg = {v: [] for v in nodes}
        for (a, b) in mult:
            deg[a].append((a, b))
            deg[b].append((a, b))
        if any(not d for d in deg.values()):
            return 0
        leaf = next((v for v in sorted(nodes) if len(deg[v]) == 1), None)
        if leaf is None:
            break
        e = deg[leaf][0]
        factor *= mult.pop(e)
        nodes = nodes - {leaf}
    (a, b), c = min(mult.items())
    rest = dict(mult)
    del rest[(a, b)]
    deleted = _dc(nodes, frozenset(rest.items()))
    # contract b into a, dropping the loops this creates
    merged = {}
    for (x, y), m in rest.items():
        x = a if x == b else x
        y = a if y == b else y
        if x == y:
            continue
        key = (x, y) if x < y else (y, x)
        merged[key] = merged.get(key, 0) + m
    contracted = _dc(nodes - {b}, frozenset(merged.items()))
    return factor * (deleted + c * contracted)


def _spanning_trees(order: int, edge_list: list):
    """Yield spanning trees (lists of edge positions) of a simple graph."""
    n_edges = len(edge_list)
    chosen: list[int] = []

    def connected_with(start: int) -> bool:
        uf = _UnionFind(order)
        for t in chosen:
            uf.union(*edge_list[t])
        for t in range(start, n_edges):
            uf.union(*edge_list[t])
        root = uf.find(0)
        return all(uf.find(v) == root for v in range(order))

    def rec(t: int, uf_parent: list):
        if len(chosen) == order - 1:
            yield list(chosen)
            return
        if t == n_edges or n_edges - t < order - 1 - len(chosen):
            return
        a, b = edge_list[t]
        ra, rb = _find(uf_parent, a), _find(uf_parent, b)
        if ra != rb:
            nxt = list(uf_parent)
            nxt[rb] = ra
            chosen.append(t)
            yield from rec(t + 1, nxt)
            chosen.pop()
        if connected_with(t + 1):
            yield from rec(t + 1, uf_parent)

    if order == 1:
        yield []
        return
    if not connected_with(0):
        return
    yield from rec(0, list(range(order)))


def _find(parent, x):
    while parent[x] != x:
        x = parent[x]
    return x


def enumerate_exact_spanning_pairs(H: Hypergraph, limit: int = 10_000) -> list[tuple[Hypergraph, tuple]]:
    """All exact spanning pairs (H', D) of a simple hypergraph.

    Each spanning tree of G_H gives H' with edges S ∪ S' over the tree's
    pairs (on the full vertex set) and D the set of those pairs. Raises
    :class:`TruncationError` with the exact count when it exceeds ``limit``.
    """
    _require_simple(H)
    count = exact_spanning_pairs_count(H, check=False)
    if count > limit:
        raise TruncationError(f"{count} exact spanning pairs exceed the limit of {limit}", count)
    G = build_associated_graph(H)
    edge_list = list(G.multiplicity)
    idx = H.index
    out = []
    for tree in _spanning_trees(G.order, edge_list):
        pairs = tuple((idx[edge_list[t][0]], idx[edge_list[t][1]]) for t in sorted(tree))
        edges = {make_part(a + b) for a, b in pairs}
        out.append((Hypergraph(edges, H.vertices), pairs))
    if len(out) != count:
        raise ArithmeticError(f"enumerated {len(out)} spanning pairs but the cofactor gives {count}")
    return out
