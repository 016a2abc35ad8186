"""Labelled enumeration of small simple hypergraphs, canonical forms and isomorphism."""
from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations, permutations, product

from ..core import Hypergraph
from ..errors import InvalidInputError, SizeCapError

MAX_N = 8


def candidate_edges(n: int, max_edge_size: int) -> list[tuple]:
    verts = range(1, n + 1)
    return [c for s in range(2, min(max_edge_size, n) + 1) for c in combinations(verts, s)]


def enumerate_hypergraphs(
    n: int, max_edge_size: int, max_edges: int | None = None, iso_reject: bool = False
) -> Iterator[Hypergraph]:
    """Simple loopless hypergraphs on {1..n}, by edge count then lexicographically.

    With ``iso_reject`` only the first member of each isomorphism class is
    yielded.
    """
    if n > MAX_N:
        raise SizeCapError(f"enumeration is capped at n = {MAX_N}")
    if n < 1:
        raise InvalidInputError("n must be at least 1")
    if max_edge_size < 1:
        raise InvalidInputError("max_edge_size must be at least 1")
    cands = candidate_edges(n, max_edge_size)
    top = len(cands) if max_edges is None else min(max_edges, len(cands))
    if top < 0:
        raise InvalidInputError("max_edges must be non-negative")
    verts = list(range(1, n + 1))
    seen = set()
    for size in range(top + 1):
        for chosen in combinations(cands, size):
            H = Hypergraph(chosen, verts)
            if iso_reject:
                key = canonical_form(H)
                if key in seen:
                    continue
                seen.add(key)
            yield H


def standard_corpus() -> Iterator[Hypergraph]:
    """Every simple hypergraph on up to four vertices, plus five vertices with at most two edges."""
    for n in range(1, 5):
        yield from enumerate_hypergraphs(n, n)
    yield from enumerate_hypergraphs(5, 5, 2)


def _vertex_signature(H: Hypergraph, v) -> tuple:
    return tuple(sorted((len(e), m) for e, m in H.edges if v in e))


def canonical_form(H: Hypergraph) -> tuple:
    """Least relabelled edge list over all relabellings that respect vertex signatures.

    The signature (sizes and multiplicities of incident edges) is invariant,
    so restricting to signature-sorted labellings loses no isomorphism.
    """
    if H.n > MAX_N:
        raise SizeCapError(f"canonical forms are capped at n = {MAX_N}")
    groups: dict[tuple, list] = {}
    for v in H.vertices:
        groups.setdefault(_vertex_signature(H, v), []).append(v)
    classes = [groups[s] for s in sorted(groups)]
    best = None
    for perms in product(*(permutations(c) for c in classes)):
        label = {}
        nxt = 0
        for block in perms:
            for v in block:
                label[v] = nxt
                nxt += 1
        enc = tuple(sorted((len(e), tuple(sorted(label[v] for v in e)), m) for e, m in H.edges))
        if best is None or enc < best:
            best = enc
    return (H.n, tuple(sorted(groups)), best)


def is_isomorphic(H1: Hypergraph, H2: Hypergraph) -> bool:
    if H1.n != H2.n or sorted(m for _, m in H1.edges) != sorted(m for _, m in H2.edges):
        return False
    if sorted(len(e) for e, _ in H1.edges) != sorted(len(e) for e, _ in H2.edges):
        return False
    return canonical_form(H1) == canonical_form(H2)
