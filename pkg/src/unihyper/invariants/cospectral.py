"""Group hypergraphs by exact characteristic polynomial and flag non-isomorphic cospectral pairs."""
from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from ..core import Hypergraph
from ..errors import InvalidInputError
from ..exact import charpoly_berkowitz
from ..hgformat import emit_hypergraph
from ..matrices import matrix_of_kind, normalized_similar_rational
from .enumeration import canonical_form

SCAN_KINDS = ("U", "UL", "UQ", "UNL")


def exact_charpoly(H: Hypergraph, kind: str) -> tuple:
    """Characteristic polynomial coefficients, exact for every kind.

    The normalized Laplacian is handled through D^+ L, a rational matrix with
    the same spectrum, so no rounding is involved.
    """
    if kind not in SCAN_KINDS:
        raise InvalidInputError(f"unknown scan kind {kind!r}; expected one of {', '.join(SCAN_KINDS)}")
    if kind == "UNL":
        return normalized_charpoly(H)
    return tuple(charpoly_berkowitz(matrix_of_kind(H, kind).exact()))


def normalized_charpoly(H: Hypergraph) -> tuple:
    """Exact characteristic polynomial of the normalized Laplacian.

    Uses D^+ L (same spectrum) scaled by c = lcm(d*) to an integer matrix;
    the coefficient of x^(k-i) is then divided by c^i.
    """
    rows = normalized_similar_rational(H)
    c = math.lcm(*(x.denominator for r in rows for x in r)) if rows else 1
    scaled = [[int(x * c) for x in r] for r in rows]
    out = []
    for i, a in enumerate(charpoly_berkowitz(scaled)):
        q = Fraction(a, c**i)
        out.append(int(q) if q.denominator == 1 else q)
    return tuple(out)


def _coeff_text(c) -> str:
    return str(c)


@dataclass
class CospectralGroup:
    kind: str
    charpoly: tuple
    classes: list  # [representative Hypergraph, member count], first-seen order

    @property
    def flagged(self) -> bool:
        return len(self.classes) >= 2

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "charpoly": [_coeff_text(c) for c in self.charpoly],
            "classes": [{"hg": emit_hypergraph(rep), "members": count} for rep, count in self.classes],
        }


@dataclass
class CospectralCatalog:
    kind: str
    groups: list
    scanned: int

    @property
    def flagged(self) -> list[CospectralGroup]:
        return [g for g in self.groups if g.flagged]

    def pairs(self) -> list[tuple[Hypergraph, Hypergraph]]:
        out = []
        for g in self.flagged:
            reps = [rep for rep, _ in g.classes]
            for i in range(len(reps)):
                for j in range(i + 1, len(reps)):
                    out.append((reps[i], reps[j]))
        return out

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "scanned": self.scanned,
            "groups": [g.to_dict() for g in self.flagged],
        }


def cospectral_scan(family: Iterable[Hypergraph], kind: str = "U") -> CospectralCatalog:
    """Bucket by exact characteristic polynomial, then split buckets by isomorphism.

    Only groups with at least two non-isomorphic members are reported by
    :attr:`CospectralCatalog.flagged`; every bucket is kept in ``groups``.
    """
    buckets: dict[tuple, CospectralGroup] = {}
    forms: dict[tuple, list] = {}
    scanned = 0
    for H in family:
        scanned += 1
        poly = exact_charpoly(H, kind)
        group = buckets.get(poly)
        if group is None:
            group = buckets[poly] = CospectralGroup(kind, poly, [])
            forms[poly] = []
        form = canonical_form(H)
        for i, f in enumerate(forms[poly]):
            if f == form:
                group.classes[i][1] += 1
                break
        else:
            forms[poly].append(form)
            group.classes.append([H, 1])
    return CospectralCatalog(kind, list(buckets.values()), scanned)
