"""Unified Cheeger constant by exhaustive subset search, and exact set distances between collections of parts."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..assoc import build_associated_graph, component_labels
from ..core import Hypergraph
from ..errors import InvalidInputError, SizeCapError, UnsupportedStructureError
from ..paths import DEFAULT_CAP, INF, set_distance

CHEEGER_CAP = 22
_CHUNK = 1 << 18


@dataclass(frozen=True)
class CheegerResult:
    value: Fraction
    subset: tuple  # a minimizing collection of parts
    cut: int
    volume: int  # smaller of the two volumes


def cheeger_constant(H: Hypergraph, cap: int = CHEEGER_CAP) -> CheegerResult:
    """Minimum of cut / min(vol X, vol X^c) over proper non-empty X ⊂ I(H).

    The cut counts 2-partitions {S, S'} with S in X and S' outside. Only
    subsets avoiding the last part are scanned since the ratio is symmetric
    under complement.
    """
    if not H.is_simple:
        raise UnsupportedStructureError("the Cheeger constant is defined for simple hypergraphs only")
    k = H.k
    if k > cap:
        raise SizeCapError(f"k = {k} exceeds the Cheeger search cap of {cap}")
    if k < 2:
        raise InvalidInputError("the Cheeger constant needs at least two parts")
    G = build_associated_graph(H)
    if len(set(component_labels(G))) != 1:
        raise InvalidInputError("the Cheeger constant needs a deeply connected hypergraph")
    dstar = np.array(H.degree_table.d_star, dtype=np.int64)
    total = int(dstar.sum())
    pairs = np.array(list(G.multiplicity), dtype=np.int64).reshape(-1, 2)
    free = k - 1  # bit i of the mask <=> part i in X, for i < k - 1
    bits = np.arange(free, dtype=np.int64)
    best_num, best_den, best_mask = 2, 1, 0
    n_masks = 1 << free
    for lo in range(1, n_masks, _CHUNK):
        masks = np.arange(lo, min(lo + _CHUNK, n_masks), dtype=np.int64)
        member = (masks[:, None] >> bits[None, :]) & 1
        member = np.concatenate([member, np.zeros((len(masks), 1), dtype=np.int64)], axis=1)
        vol = member @ dstar
        small = np.minimum(vol, total - vol)
        cut = (member[:, pairs[:, 0]] != member[:, pairs[:, 1]]).sum(axis=1)
        ok = small > 0
        if not ok.any():
            continue
        ratio = np.where(ok, cut / np.where(ok, small, 1), np.inf)
        floor = ratio.min()
        # resolve near-ties exactly; the float minimum is only a filter
        for t in np.nonzero(ratio <= floor * (1 + 1e-9) + 1e-15)[0]:
            num, den = int(cut[t]), int(small[t])
            if num * best_den < best_num * den or (num * best_den == best_num * den and masks[t] < best_mask):
                best_num, best_den, best_mask = num, den, int(masks[t])
    subset = tuple(H.index[i] for i in range(free) if best_mask >> i & 1)
    return CheegerResult(Fraction(best_num, best_den), subset, best_num, best_den)


def _parts(H: Hypergraph, coll, name: str) -> list:
    if isinstance(coll, (int, str)):
        raise InvalidInputError(f"{name} must be a collection of parts")
    parts = [H.part(p) for p in coll]
    if not parts:
        raise InvalidInputError(f"{name} must be non-empty")
    return parts


def subset_distance(H: Hypergraph, X, Y, cap: int | None = DEFAULT_CAP):
    """Least exact set distance between a part of X and a part of Y (0 if they meet)."""
    xs = _parts(H, X, "X")
    ys = _parts(H, Y, "Y")
    if set(xs) & set(ys):
        return 0
    best = INF
    for a in xs:
        for b in ys:
            d = set_distance(H, a, b, "ESD", cap)
            if d < best:
                best = d
                if best == 1:
                    return best
    return best

