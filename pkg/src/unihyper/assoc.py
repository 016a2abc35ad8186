"""Associated multigraph on I(H), its components, and exact subhypergraphs."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .core import Hypergraph, make_part, part_key
from .errors import InvalidIndexError, InvalidInduceSetError, UnsupportedStructureError


def require_loopless(H: Hypergraph, what: str = "this operation"):
    if not H.is_loopless:
        loop = next(p for p, _ in H.edges if len(p) == 1)
        raise UnsupportedStructureError(f"{what} needs a loopless hypergraph; found loop {{{loop[0]}}}")


@dataclass(frozen=True)
class AssociatedGraph:
    """Multigraph whose nodes are I(H) and whose edge multiplicities are the c's.

    ``multiplicity`` maps ``(i, j)`` with ``i < j`` (canonical positions) to c.
    """

    nodes: tuple
    multiplicity: dict

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in self.nodes]
        for i, j in self.multiplicity:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, i: int) -> int:
        return sum(self.c(i, j) for j in self.adjacency[i])

    def c(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self.multiplicity.get((i, j), 0)

    @property
    def order(self) -> int:
        return len(self.nodes)

    @property
    def size(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(self.multiplicity.values())

    def to_networkx(self):
        import networkx as nx

        G = nx.MultiGraph()
        G.add_nodes_from(range(self.order))
        for (i, j), c in self.multiplicity.items():
            for _ in range(c):
                G.add_edge(i, j)
        return G


def _pairs_multiplicity(H: Hypergraph) -> dict:
    mult: dict[tuple[int, int], int] = {}
    for i, j, _, m in H.neighbor_pairs:
        mult[(i, j)] = mult.get((i, j), 0) + m
    return dict(sorted(mult.items()))


def build_associated_graph(H: Hypergraph) -> AssociatedGraph:
    require_loopless(H, "the associated graph")
    return AssociatedGraph(H.index, _pairs_multiplicity(H))


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass(frozen=True)
class DEClass:
    members: tuple  # parts, canonical order
    is_trivial: bool
    has_odd_exact_cycle: bool

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class DEPartition:
    classes: tuple
    hypergraph: Hypergraph = field(repr=False, compare=False)

    @property
    def count(self) -> int:
        return len(self.classes)

    @property
    def trivial_count(self) -> int:
        return sum(c.is_trivial for c in self.classes)

    @property
    def bipartite_nontrivial_count(self) -> int:
        return sum(not c.is_trivial and not c.has_odd_exact_cycle for c in self.classes)

    def induced(self) -> list[Hypergraph]:
        return [exact_subhypergraph(self.hypergraph, c.members) for c in self.classes]

    def grouped(self) -> list[tuple[Hypergraph, int]]:
        """Distinct induced exact subhypergraphs with the number of classes inducing each."""
        out: list[list] = []
        for sub in self.induced():
            for entry in out:
                if entry[0] == sub:
                    entry[1] += 1
                    break
            else:
                out.append([sub, 1])
        return [(s, c) for s, c in out]


def component_labels(G: AssociatedGraph) -> list[int]:
    """Component representative (least position) for each node."""
    uf = _UnionFind(G.order)
    for i, j in G.multiplicity:
        uf.union(i, j)
    return [uf.find(i) for i in range(G.order)]


def _is_bipartite(G: AssociatedGraph, nodes) -> bool:
    colour = {nodes[0]: 0}
    queue = deque([nodes[0]])
    while queue:
        x = queue.popleft()
        for y in G.adjacency[x]:
            if y not in colour:
                colour[y] = colour[x] ^ 1
                queue.append(y)
            elif colour[y] == colour[x]:
                return False
    return True


def de_components(H: Hypergraph) -> DEPartition:
    G = build_associated_graph(H)
    labels = component_labels(G)
    groups: dict[int, list[int]] = {}
    for i, root in enumerate(labels):
        groups.setdefault(root, []).append(i)
    dstar = H.degree_table.d_star
    classes = []
    for root in sorted(groups):
        nodes = groups[root]
        parts = tuple(H.index[i] for i in nodes)
        trivial = len(nodes) == 1 and len(parts[0]) == 1 and dstar[nodes[0]] == 0
        classes.append(DEClass(parts, trivial, not _is_bipartite(G, nodes)))
    return DEPartition(tuple(classes), H)


def exact_subhypergraph(H: Hypergraph, D) -> Hypergraph:
    """Subhypergraph induced by the exact paths running inside ``D``.

    Its edges are the unions S ∪ S' of adjacent S, S' in ``D`` (with their
    multiplicities in H); its vertices are those edges' vertices plus the
    vertices of singletons in ``D``.
    """
    require_loopless(H, "exact subhypergraphs")
    try:
        parts = {H.part(p) for p in D}
    except InvalidIndexError as exc:
        raise InvalidInduceSetError(exc.detail) from exc
    if not parts:
        raise InvalidInduceSetError("the inducing set is empty")
    pos = H.position
    inside = {pos[p] for p in parts}
    edges = {}
    touched = set()
    for i, j, no, m in H.neighbor_pairs:
        if i in inside and j in inside:
            e, _ = H.edges[no]
            edges[e] = m
            touched.update((i, j))
    lonely = [p for p in parts if len(p) > 1 and pos[p] not in touched]
    if lonely:
        worst = min(lonely, key=part_key)
        raise InvalidInduceSetError(f"{list(worst)} has no neighbour inside the inducing set")
    vertices = set()
    for e in edges:
        vertices.update(e)
    for p in parts:
        if len(p) == 1:
            vertices.add(p[0])
    return Hypergraph(edges, vertices)


def class_of(partition: DEPartition, S) -> DEClass:
    p = make_part(S)
    for c in partition.classes:
        if p in c.members:
            return c
    raise InvalidIndexError(f"{list(p)} is not an element of the index set")

