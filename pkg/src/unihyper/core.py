"""Hypergraph data model, index sets, edge 2-partitions, degrees and volumes.

Vertices are ints or strings. Every non-empty vertex subset is stored as a
*part*: a tuple of vertices sorted by :func:`vertex_key`. Parts are compared
by :func:`part_key` (size first, then lexicographic), which is also the row
and column order of every matrix built from a hypergraph.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Union

from .errors import InvalidIndexError, InvalidInputError, InvalidVertexError

Vertex = Union[int, str]
PartSet = tuple


def vertex_key(v):
    """Sort key putting ints (numerically) before strings (lexically)."""
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise InvalidInputError(f"vertex must be an int or a string, got {v!r}")
    if isinstance(v, int):
        return (0, v, "")
    return (1, 0, v)


def part_key(p: PartSet):
    return (len(p), tuple(vertex_key(v) for v in p))


def make_part(members: Iterable) -> PartSet:
    """Canonical part for a collection of vertices."""
    if isinstance(members, (int, str)):
        members = (members,)
    unique = set(members)
    if not unique:
        raise InvalidInputError("a part must be non-empty")
    return tuple(sorted(unique, key=vertex_key))


def partitions2(e: Iterable) -> list[tuple[PartSet, PartSet]]:
    """All unordered 2-partitions of ``e``.

    Each pair is returned as ``(A, B)`` with ``A`` before ``B`` in canonical
    part order, and the list is sorted by ``A`` then ``B``.
    """
    e = make_part(e)
    size = len(e)
    out = []
    # subsets containing the least element, excluding e itself
    for mask in range(1 << (size - 1)):
        full = (mask << 1) | 1
        if full == (1 << size) - 1:
            continue
        a = tuple(e[i] for i in range(size) if full >> i & 1)
        b = tuple(e[i] for i in range(size) if not full >> i & 1)
        if part_key(b) < part_key(a):
            a, b = b, a
        out.append((a, b))
    out.sort(key=lambda ab: (part_key(ab[0]), part_key(ab[1])))
    return out


def tau_size(edge_size: int) -> int:
    """Number of 2-partitions of an edge with ``edge_size`` vertices."""
    if edge_size < 1:
        raise InvalidInputError("edge size must be positive")
    return 2 ** (edge_size - 1) - 1


class Hypergraph:
    """Finite hypergraph with edge multiplicities.

    Parameters
    ----------
    edges:
        Either an iterable of vertex collections, one per edge occurrence
        (repeats accumulate multiplicity), or a mapping from vertex
        collections to positive multiplicities.
    vertices:
        Extra vertices; vertices appearing in edges are added automatically.

    Instances are treated as immutable. Derived structures are cached.
    """

    def __init__(self, edges: Iterable | Mapping = (), vertices: Iterable = ()):
        mult: dict[PartSet, int] = {}
        if isinstance(edges, Mapping):
            items = edges.items()
        else:
            items = ((e, 1) for e in edges)
        for members, m in items:
            if isinstance(m, bool) or not isinstance(m, int) or m < 1:
                raise InvalidInputError(f"multiplicity must be a positive integer, got {m!r}")
            part = make_part(members)
            mult[part] = mult.get(part, 0) + m
        vs = {v for v in vertices}
        for v in vs:
            vertex_key(v)
        for part in mult:
            vs.update(part)
        if not vs:
            raise InvalidInputError("a hypergraph needs at least one vertex")
        self._vertices = tuple(sorted(vs, key=vertex_key))
        self._mult = {p: mult[p] for p in sorted(mult, key=part_key)}
        self._edges = tuple(self._mult.items())

    # -- basic views -------------------------------------------------------
    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[PartSet, int], ...]:
        """Distinct edges with multiplicities, in canonical order."""
        return self._edges

    @property
    def edge_sets(self) -> tuple[PartSet, ...]:
        return tuple(self._mult)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def k(self) -> int:
        return len(self.index)

    @property
    def edge_count(self) -> int:
        """Number of edge occurrences, |E(H)| counted with multiplicity."""
        return sum(self._mult.values())

    def multiplicity(self, e: Iterable) -> int:
        return self._mult.get(make_part(e), 0)

    @property
    def loops(self) -> dict[Vertex, int]:
        return {p[0]: m for p, m in self._mult.items() if len(p) == 1}

    @property
    def is_loopless(self) -> bool:
        return all(len(p) > 1 for p in self._mult)

    @property
    def is_simple(self) -> bool:
        return self.is_loopless and all(m == 1 for m in self._mult.values())

    def has_vertex(self, v) -> bool:
        return v in self.vertex_position

    def check_vertex(self, v) -> Vertex:
        if isinstance(v, bool) or v not in self.vertex_position:
            raise InvalidVertexError(f"unknown vertex {v!r}")
        return v

    def part(self, members: Iterable) -> PartSet:
        """Canonical part of ``members``, which must lie in I(H)."""
        try:
            p = make_part(members)
        except (InvalidInputError, TypeError) as exc:
            raise InvalidIndexError(f"not a valid part: {members!r}") from exc
        if p not in self.position:
            raise InvalidIndexError(f"{list(p)} is not an element of the index set")
        return p

    # -- derived, cached ---------------------------------------------------
    @cached_property
    def vertex_position(self) -> dict:
        return {v: i for i, v in enumerate(self._vertices)}

    @cached_property
    def index(self) -> tuple[PartSet, ...]:
        parts = {(v,) for v in self._vertices}
        for e in self._mult:
            if len(e) > 1:
                for a, b in partitions2(e):
                    parts.add(a)
                    parts.add(b)
        return tuple(sorted(parts, key=part_key))

    @cached_property
    def position(self) -> dict[PartSet, int]:
        return {p: i for i, p in enumerate(self.index)}

    @cached_property
    def part_masks(self) -> tuple[int, ...]:
        """Vertex bitmask of every element of I(H)."""
        vp = self.vertex_position
        return tuple(sum(1 << vp[v] for v in p) for p in self.index)

    @cached_property
    def neighbor_pairs(self) -> tuple[tuple[int, int, int, int], ...]:
        """(i, j, edge_no, m) for every 2-partition of every non-loop edge.

        ``i < j`` are I(H) positions, ``edge_no`` indexes :attr:`edges`.
        """
        pos = self.position
        out = []
        for no, (e, m) in enumerate(self._mult.items()):
            if len(e) < 2:
                continue
            for a, b in partitions2(e):
                out.append((pos[a], pos[b], no, m))
        return tuple(out)

    @cached_property
    def degree_table(self) -> DegreeTable:
        idx = self.index
        d = []
        ds = []
        for p in idx:
            s = set(p)
            deg = sum(m for e, m in self._mult.items() if s.issubset(e))
            own = self._mult.get(p, 0) if len(p) > 1 else 0
            d.append(deg)
            ds.append(deg - own)
        return DegreeTable(idx, tuple(d), tuple(ds))

    # -- construction helpers ---------------------------------------------
    def without(self, e: Iterable, r: int = 1) -> Hypergraph:
        """H - e^r: remove ``r`` occurrences of edge ``e`` (vertices kept)."""
        p = make_part(e)
        m = self._mult.get(p, 0)
        if not 0 < r <= m:
            raise InvalidInputError(f"cannot remove {r} copies of {list(p)} (multiplicity {m})")
        mult = dict(self._mult)
        if r == m:
            del mult[p]
        else:
            mult[p] = m - r
        return Hypergraph(mult, self._vertices)

    def with_edge(self, e: Iterable, m: int = 1) -> Hypergraph:
        mult = dict(self._mult)
        p = make_part(e)
        mult[p] = mult.get(p, 0) + m
        return Hypergraph(mult, self._vertices)

    # -- dunder -------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self._vertices == other._vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self._vertices, self.edges))

    def __repr__(self):
        es = ", ".join(
            ("{" + ",".join(map(str, e)) + "}") + (f"*{m}" if m > 1 else "")
            for e, m in self._mult.items()
        )
        return f"Hypergraph(V={{{','.join(map(str, self._vertices))}}}, E=[{es}])"


@dataclass(frozen=True)
class DegreeTable:
    """Unified degree ``d`` and modified unified degree ``d_star`` per part."""

    parts: tuple
    d: tuple
    d_star: tuple

    def __getitem__(self, part) -> tuple[int, int]:
        i = self.parts.index(make_part(part))
        return self.d[i], self.d_star[i]

    def __len__(self):
        return len(self.parts)

    def items(self):
        return zip(self.parts, zip(self.d, self.d_star))

    @property
    def min_star(self) -> int:
        """m*(H), the least modified degree."""
        return min(self.d_star)

    @property
    def max_star(self) -> int:
        return max(self.d_star)

    @property
    def mean_star(self) -> Fraction:
        return Fraction(sum(self.d_star), len(self.d_star))


def index_set(H: Hypergraph) -> list[PartSet]:
    return list(H.index)


def degrees(H: Hypergraph) -> DegreeTable:
    return H.degree_table


def vertex_degree(H: Hypergraph, v) -> int:
    """Number of edge occurrences containing ``v``."""
    H.check_vertex(v)
    return sum(m for e, m in H.edges if v in e)


def max_vertex_degree(H: Hypergraph) -> int:
    return max(vertex_degree(H, v) for v in H.vertices)


def neighbor_multiplicity(H: Hypergraph, S, S2) -> int:
    """Total multiplicity of edges that ``S`` and ``S2`` split into two parts."""
    a, b = H.part(S), H.part(S2)
    if set(a) & set(b):
        return 0
    union = make_part(a + b)
    if len(union) < 2:
        return 0
    return H._mult.get(union, 0)


def volume(H: Hypergraph, parts: Iterable) -> int:
    """Sum of modified degrees over a non-empty collection of parts."""
    ps = {H.part(p) for p in parts}
    if not ps:
        raise InvalidInputError("volume of an empty collection is undefined")
    table = H.degree_table
    pos = H.position
    return sum(table.d_star[pos[p]] for p in ps)


def total_volume(H: Hypergraph) -> int:
    return sum(H.degree_table.d_star)


def partition_count(H: Hypergraph) -> int:
    """|tau(H)|: number of distinct 2-partitions over the distinct edges."""
    return sum(tau_size(len(e)) for e, _ in H.edges)


def weighted_partition_count(H: Hypergraph) -> int:
    """Sum of m(e)|tau(e)| over non-loop edges."""
    return sum(m * tau_size(len(e)) for e, m in H.edges)


def included_edges(H: Hypergraph) -> list[PartSet]:
    """Edges properly contained in another edge."""
    es = H.edge_sets
    return [e for e in es if any(len(f) > len(e) and set(e) <= set(f) for f in es)]


def is_subset_regular(H: Hypergraph) -> bool:
    return len(set(H.degree_table.d)) <= 1

