"""Unified matrices of a hypergraph and its two incidence matrices.

Rows and columns follow the canonical order of I(H). The integer matrices
(U, U^D, U^L, U^Q) are held as int64 arrays and exposed exactly as Python
ints; the normalized Laplacian is float64.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .core import Hypergraph, partitions2
from .errors import InvalidInputError, SizeCapError, UnsupportedStructureError

KINDS = ("U", "UD", "UL", "UQ", "UNL")


@dataclass(frozen=True, eq=False)
class SymMatrix:
    """Dense symmetric matrix with its index labels.

    ``scalar`` is ``"integer"`` or ``"float"``. For the normalized Laplacian,
    ``pencil`` holds ``(L, dstar)`` with L the exact Laplacian rows, so exact
    statements about it can be reduced to integer arithmetic.
    """

    name: str
    scalar: str
    labels: tuple
    data: np.ndarray
    pencil: tuple | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return self.data.shape[0]

    @property
    def is_exact(self) -> bool:
        return self.scalar == "integer"

    def exact(self) -> list[list[int]]:
        if not self.is_exact:
            raise TypeError(f"{self.name} is a float matrix")
        return [[int(x) for x in row] for row in self.data]

    def frobenius(self) -> float:
        return float(np.linalg.norm(self.data.astype(float)))

    def trace(self):
        if self.is_exact:
            return sum(int(self.data[i, i]) for i in range(self.order))
        return float(np.trace(self.data))

    def to_dict(self) -> dict:
        if self.is_exact:
            rows = self.exact()
        else:
            rows = [[_clean_float(x) for x in row] for row in self.data]
        return {
            "order": self.order,
            "index_labels": [list(p) for p in self.labels],
            "kind": self.name,
            "rows": rows,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + [label_text(p) for p in self.labels])
        for p, row in zip(self.labels, self.to_dict()["rows"]):
            w.writerow([label_text(p)] + [repr(x) if isinstance(x, float) else x for x in row])
        return buf.getvalue()


def label_text(p) -> str:
    return "{" + ",".join(map(str, p)) + "}"


def _clean_float(x) -> float:
    x = float(x)
    return 0.0 if x == 0 else x


def unified_matrix(H: Hypergraph) -> SymMatrix:
    k = H.k
    a = np.zeros((k, k), dtype=np.int64)
    pos = H.position
    for v, m in H.loops.items():
        a[pos[(v,)], pos[(v,)]] = m
    for i, j, _, m in H.neighbor_pairs:
        a[i, j] += m
        a[j, i] += m
    return SymMatrix("U", "integer", H.index, a)


def unified_degree_matrix(H: Hypergraph) -> SymMatrix:
    d = np.array(H.degree_table.d_star, dtype=np.int64)
    return SymMatrix("UD", "integer", H.index, np.diag(d))


def unified_laplacian(H: Hypergraph) -> SymMatrix:
    a = unified_degree_matrix(H).data - unified_matrix(H).data
    return SymMatrix("UL", "integer", H.index, a)


def unified_signless_laplacian(H: Hypergraph) -> SymMatrix:
    a = unified_degree_matrix(H).data + unified_matrix(H).data
    return SymMatrix("UQ", "integer", H.index, a)


def unified_normalized_laplacian(H: Hypergraph) -> SymMatrix:
    """Normalized Laplacian: L scaled by 1/sqrt(d*) on both sides.

    Parts with d* = 0 get an all-zero row and column. A loop singleton gets
    1 - m/d* on the diagonal and every other part with d* > 0 gets 1.
    """
    lap = unified_laplacian(H)
    dstar = H.degree_table.d_star
    k = H.k
    out = np.zeros((k, k), dtype=np.float64)
    inv = [1.0 / math.sqrt(d) if d > 0 else 0.0 for d in dstar]
    L = lap.data
    for i in range(k):
        if dstar[i] == 0:
            continue
        out[i, i] = float(Fraction(int(L[i, i]), dstar[i]))
        for j in range(i + 1, k):
            if L[i, j] and dstar[j]:
                x = float(L[i, j]) * inv[i] * inv[j]
                out[i, j] = x
                out[j, i] = x
    return SymMatrix("UNL", "float", H.index, out, pencil=(lap.exact(), tuple(dstar)))


def normalized_similar_rational(H: Hypergraph) -> list[list[Fraction]]:
    """D^+ L over the rationals; similar to the normalized Laplacian."""
    lap = unified_laplacian(H).exact()
    dstar = H.degree_table.d_star
    return [
        [Fraction(x, dstar[i]) if dstar[i] else Fraction(0) for x in row]
        for i, row in enumerate(lap)
    ]


_BUILDERS = {
    "U": unified_matrix,
    "UD": unified_degree_matrix,
    "UL": unified_laplacian,
    "UQ": unified_signless_laplacian,
    "UNL": unified_normalized_laplacian,
}


def matrix_of_kind(H: Hypergraph, kind: str) -> SymMatrix:
    try:
        builder = _BUILDERS[kind]
    except KeyError:
        raise InvalidInputError(f"unknown matrix kind {kind!r}; expected one of {', '.join(KINDS)}") from None
    return builder(H)


@dataclass(frozen=True, eq=False)
class IncidenceMatrix:
    """Incidence of I(H) against (edge, 2-partition) columns.

    ``form`` is ``"arc"`` (entries -1/0/+1, tail gets -1) or ``"parts"`` (0/1).
    """

    form: str
    row_labels: tuple
    columns: tuple
    data: np.ndarray

    def exact(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.data]

    def to_dict(self) -> dict:
        return {
            "form": self.form,
            "row_labels": [list(p) for p in self.row_labels],
            "columns": [{"edge": list(e), "parts": [list(a), list(b)]} for e, (a, b) in self.columns],
            "rows": self.exact(),
        }


def _require_simple(H: Hypergraph, what: str):
    if not H.is_simple:
        raise UnsupportedStructureError(f"{what} is defined for simple hypergraphs only")


def _incidence(H: Hypergraph, form: str) -> IncidenceMatrix:
    pos = H.position
    cols = []
    for e, _ in H.edges:
        for ab in partitions2(e):
            cols.append((e, ab))
    a = np.zeros((H.k, len(cols)), dtype=np.int64)
    for c, (_, (tail, head)) in enumerate(cols):
        a[pos[tail], c] = -1 if form == "arc" else 1
        a[pos[head], c] = 1
    return IncidenceMatrix(form, H.index, tuple(cols), a)


def arc_incidence(H: Hypergraph) -> IncidenceMatrix:
    _require_simple(H, "the arc incidence matrix")
    return _incidence(H, "arc")


def edge_parts_incidence(H: Hypergraph) -> IncidenceMatrix:
    _require_simple(H, "the edge-parts incidence matrix")
    return _incidence(H, "parts")


def is_totally_unimodular(rows, max_minors: int = 250_000) -> bool:
    """Exhaustive check that every square minor lies in {-1, 0, 1}.

    Minors of each order are evaluated in numpy batches and rounded; entries
    are in {-1, 0, 1} by then and orders stay small, so rounding is exact.
    Refuses (size error) when the number of square submatrices exceeds
    ``max_minors``.
    """
    a = np.array([list(r) for r in rows], dtype=np.int64).reshape(len(rows), -1)
    nr, nc = a.shape
    total = sum(math.comb(nr, s) * math.comb(nc, s) for s in range(1, min(nr, nc) + 1))
    if total > max_minors:
        raise SizeCapError(f"{total} square minors exceed the cap of {max_minors}")
    if np.any((a < -1) | (a > 1)):
        return False
    af = a.astype(np.float64)
    for s in range(2, min(nr, nc) + 1):
        cols = np.array(list(combinations(range(nc), s)), dtype=np.intp)
        for rs in combinations(range(nr), s):
            sub = af[list(rs)][:, cols].transpose(1, 0, 2)
            dets = np.rint(np.linalg.det(sub))
            if np.any(np.abs(dets) > 1):
                return False
    return True


@dataclass(frozen=True, eq=False)
class UnifiedMatrixBundle:
    U: SymMatrix
    UD: SymMatrix
    UL: SymMatrix
    UQ: SymMatrix
    UNL: SymMatrix
    R: IncidenceMatrix | None
    B: IncidenceMatrix | None


def matrix_bundle(H: Hypergraph) -> UnifiedMatrixBundle:
    simple = H.is_simple
    return UnifiedMatrixBundle(
        unified_matrix(H),
        unified_degree_matrix(H),
        unified_laplacian(H),
        unified_signless_laplacian(H),
        unified_normalized_laplacian(H),
        arc_incidence(H) if simple else None,
        edge_parts_incidence(H) if simple else None,
    )
