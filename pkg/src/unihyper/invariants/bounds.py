"""Machine checks of spectral identities and inequalities on a concrete hypergraph.

:func:`bound_suite` evaluates every check on one hypergraph and returns a
:class:`VerificationReport`. Each check gates itself on its hypotheses and is
reported as inapplicable when they fail. Exact arithmetic (ints, Fractions,
exact ranks and characteristic polynomials) is used wherever both sides are
rational; otherwise sides are compared as floats with slack >= -tol.

Records flagged ``audit`` test statements that are asserted in proofs but are
not implied by the definitions; their failures are logged, never fatal.
"""
from __future__ import annotations

import hashlib
import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations

import numpy as np

from ..assoc import build_associated_graph, de_components
from ..core import (
    Hypergraph,
    is_subset_regular,
    max_vertex_degree,
    partition_count,
    tau_size,
    weighted_partition_count,
)
from ..errors import NumericalDisagreementError, SizeCapError
from ..exact import (
    distinct_root_count,
    is_positive_definite,
    max_root_multiplicity,
    poly_eval,
    rank_exact,
)
from ..hgformat import emit_hypergraph
from ..matrices import (
    arc_incidence,
    edge_parts_incidence,
    is_totally_unimodular,
    unified_laplacian,
    unified_matrix,
    unified_normalized_laplacian,
    unified_signless_laplacian,
)
from ..paths import DEFAULT_CAP, DistanceMode, diameter, set_distance_matrix
from ..spectra import (
    char_poly_exact,
    cofactor_exact,
    eigenvalues_sym,
    exact_multiplicity,
    interlacing_check,
    multiplicity_of,
)
from .cheeger import CHEEGER_CAP, cheeger_constant
from .cospectral import normalized_charpoly
from .spanning import spanning_tree_count_dc

TOL = 1e-8
ROOT_TOL = 1e-6  # numeric side of an exact root test
DC_MAX_K = 12
TU_MAX_MINORS = 250_000
FAMILY_RANDOM = 6


# -- records -------------------------------------------------------------


@dataclass(frozen=True)
class Record:
    theorem: str
    applicable: bool
    relation: str = ""
    lhs: object = None
    rhs: object = None
    holds: bool | None = None
    slack: float | None = None
    audit: bool = False
    note: str = ""

    def __post_init__(self):
        # numpy comparisons yield np.bool_ / np.float64; keep records plain
        if self.holds is not None:
            object.__setattr__(self, "holds", bool(self.holds))
        if self.slack is not None:
            object.__setattr__(self, "slack", float(self.slack))

    @property
    def status(self) -> str:
        if not self.applicable:
            return "inapplicable"
        if self.holds:
            return "pass"
        return "audit-fail" if self.audit else "fail"

    @property
    def hard_failure(self) -> bool:
        return self.applicable and self.holds is False and not self.audit

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "status": self.status,
            "hypothesis_satisfied": self.applicable,
            "relation": self.relation,
            "lhs": json_value(self.lhs),
            "rhs": json_value(self.rhs),
            "holds": self.holds,
            "slack": json_value(self.slack),
            "audit": self.audit,
            "note": self.note,
        }


def json_value(x):
    """JSON-safe rendering: Fractions as "p/q", floats to 12 significant digits."""
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        x = float(f"{x:.12g}")
        return 0.0 if x == 0 else x
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (list, tuple)):
        return [json_value(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


@dataclass
class VerificationReport:
    fingerprint: str
    hg: str
    records: list = field(default_factory=list)

    @property
    def hard_failures(self) -> list[Record]:
        return [r for r in self.records if r.hard_failure]

    @property
    def audit_failures(self) -> list[Record]:
        return [r for r in self.records if r.applicable and r.audit and r.holds is False]

    @property
    def ok(self) -> bool:
        return not self.hard_failures

    def record(self, theorem: str) -> Record:
        for r in self.records:
            if r.theorem == theorem:
                return r
        raise KeyError(theorem)

    def summary(self) -> dict:
        applicable = [r for r in self.records if r.applicable]
        return {
            "records": len(self.records),
            "applicable": len(applicable),
            "passed": sum(bool(r.holds) for r in applicable),
            "hard_failures": len(self.hard_failures),
            "audit_failures": len(self.audit_failures),
        }

    def to_dict(self) -> dict:
        return {
            "fingerprint": self.fingerprint,
            "hg": self.hg,
            "summary": self.summary(),
            "records": [r.to_dict() for r in self.records],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def fingerprint(H: Hypergraph) -> str:
    return hashlib.sha256(emit_hypergraph(H).encode()).hexdigest()[:16]


# -- comparison helpers --------------------------------------------------


def _exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def _slack(a, b):
    if _exact(a) and _exact(b):
        return b - a
    a, b = float(a), float(b)
    if math.isinf(a) and math.isinf(b) and a == b:
        return 0.0
    return b - a


def compare(theorem, lhs, relation, rhs, tol=TOL, audit=False, note="") -> Record:
    """Record for ``lhs relation rhs``; exact when both sides are rational."""
    exact = _exact(lhs) and _exact(rhs)
    if relation in ("<=", "<"):
        s = _slack(lhs, rhs)
    elif relation in (">=", ">"):
        s = _slack(rhs, lhs)
    elif relation == "==":
        s = -abs(_slack(lhs, rhs))
    else:
        raise ValueError(relation)
    if exact:
        holds = s > 0 if relation in ("<", ">") else s >= 0
    else:
        # strict inequalities between floats are only decidable up to tol
        holds = s >= -tol
    return Record(theorem, True, relation, lhs, rhs, bool(holds), float(s), audit, note)


def iff(theorem, left: bool, right: bool, audit=False, note="") -> Record:
    return Record(theorem, True, "iff", bool(left), bool(right), bool(left) == bool(right), None, audit, note)


def implies(theorem, left: bool, right: bool, audit=False, note="") -> Record:
    return Record(theorem, True, "implies", bool(left), bool(right), (not left) or bool(right), None, audit, note)


def chain(theorem, values, tol=TOL, audit=False, note="") -> Record:
    """values[0] >= values[1] >= ..."""
    slacks = [_slack(b, a) for a, b in zip(values, values[1:])]
    worst = min(slacks, default=0)
    holds = all((s >= 0) if isinstance(s, (int, Fraction)) else s >= -tol for s in slacks)
    return Record(theorem, True, "chain>=", list(values), None, bool(holds), float(worst), audit, note)


def na(theorem, reason: str, audit=False) -> Record:
    return Record(theorem, False, audit=audit, note=reason)


def _floor(x: float) -> int:
    return math.floor(x + 1e-9)


def _ceil(x: float) -> int:
    return math.ceil(x - 1e-9)


# -- graph predicates on (order, adjacency sets) ---------------------------


def _connected(order: int, adj) -> bool:
    if order == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == order


def _is_path(order, adj) -> bool:
    m = sum(len(a) for a in adj) // 2
    return _connected(order, adj) and m == order - 1 and all(len(a) <= 2 for a in adj)


def _is_cycle(order, adj) -> bool:
    return order >= 3 and _connected(order, adj) and all(len(a) == 2 for a in adj)


def _is_complete(order, adj) -> bool:
    return all(len(a) == order - 1 for a in adj)


def _multipartite_parts(order, adj) -> int | None:
    """Number of parts if the graph is complete multipartite (non-adjacency is
    an equivalence relation with at least two classes), else None."""
    classes: list[list[int]] = []
    for v in range(order):
        for c in classes:
            if c[0] not in adj[v]:
                c.append(v)
                break
        else:
            classes.append([v])
    if len(classes) < 2:
        return None
    for c in classes:
        cs = set(c)
        for v in c:
            if adj[v] & cs:
                return None
            if len(adj[v]) != order - len(c):
                return None
    return len(classes)


def _is_claw(order, adj) -> bool:
    degs = sorted(len(a) for a in adj)
    return order == 4 and degs == [1, 1, 1, 3]


# -- cached facts about one hypergraph -------------------------------------


class _Facts:
    def __init__(self, H: Hypergraph, path_cap, cheeger_cap):
        self.H = H
        self.k = H.k
        self.path_cap = path_cap
        self.cheeger_cap = cheeger_cap

    @cached_property
    def simple(self):
        return self.H.is_simple

    @cached_property
    def loopless(self):
        return self.H.is_loopless

    @cached_property
    def dstar(self):
        return list(self.H.degree_table.d_star)

    @cached_property
    def UL(self):
        return unified_laplacian(self.H)

    @cached_property
    def UQ(self):
        return unified_signless_laplacian(self.H)

    @cached_property
    def UNL(self):
        return unified_normalized_laplacian(self.H)

    @cached_property
    def nu(self):
        return eigenvalues_sym(self.UL)

    @cached_property
    def xi(self):
        return eigenvalues_sym(self.UQ)

    @cached_property
    def nhat(self):
        return eigenvalues_sym(self.UNL)

    @cached_property
    def poly_L(self):
        return char_poly_exact(self.UL).coeffs

    @cached_property
    def poly_Q(self):
        return char_poly_exact(self.UQ).coeffs

    @cached_property
    def poly_N(self):
        return normalized_charpoly(self.H)

    @cached_property
    def G(self):
        return build_associated_graph(self.H)

    @cached_property
    def adj(self):
        return [set(a) for a in self.G.adjacency]

    @cached_property
    def classes(self):
        return de_components(self.H)

    @cached_property
    def deeply(self):
        return self.classes.count == 1

    @cached_property
    def complete(self):
        return _is_complete(self.k, self.adj)

    @cached_property
    def odd_cycle(self):
        return any(c.has_odd_exact_cycle for c in self.classes.classes)

    @cached_property
    def isolated(self):
        return sum(1 for v in self.H.vertices if self.dstar[self.H.position[(v,)]] == 0)

    @cached_property
    def is_graph(self):
        return self.simple and all(len(e) == 2 for e, _ in self.H.edges)

    @cached_property
    def graph_adj(self):
        vp = self.H.vertex_position
        adj = [set() for _ in self.H.vertices]
        for e, _ in self.H.edges:
            if len(e) != 2:
                continue
            a, b = vp[e[0]], vp[e[1]]
            adj[a].add(b)
            adj[b].add(a)
        return adj

    @cached_property
    def tau(self):
        return partition_count(self.H)

    @cached_property
    def vol(self):
        return sum(self.dstar)

    @cached_property
    def delta(self):
        return max_vertex_degree(self.H)

    @cached_property
    def included(self):
        return any(self.H.multiplicity(p) for p in self.H.index if len(p) > 1)

    @cached_property
    def loops_total(self):
        return sum(self.H.loops.values())

    @cached_property
    def esd_matrix(self):
        return np.array(set_distance_matrix(self.H), dtype=float)

    def diam(self, mode):
        return diameter(self.H, mode, self.path_cap)

    @cached_property
    def profile(self):
        from ..paths import connectedness_profile

        return connectedness_profile(self.H, self.path_cap)

    @cached_property
    def cheeger(self):
        return cheeger_constant(self.H, self.cheeger_cap)

    @cached_property
    def family(self):
        """Deterministic family of proper non-empty subsets of I(H), as bit lists."""
        k = self.k
        out: list[tuple] = []

        def add(members):
            t = tuple(sorted(set(members)))
            if 0 < len(t) < k and t not in out:
                out.append(t)

        for j in sorted({1, 2, k // 2, k - 2, k - 1}):
            add(range(j))
            add(range(k - j, k))
        for c in self.classes.classes[:4]:
            add(self.H.position[p] for p in c.members)
        rng = random.Random(fingerprint(self.H))
        for _ in range(FAMILY_RANDOM):
            add(i for i in range(k) if rng.random() < 0.5)
        return out

    @cached_property
    def family_matrix(self):
        M = np.zeros((len(self.family), self.k), dtype=np.int64)
        for r, members in enumerate(self.family):
            M[r, list(members)] = 1
        return M


def _root_at(poly, q, approx) -> bool:
    return poly_eval(poly, q) == 0 and abs(float(approx) - float(q)) <= ROOT_TOL


# -- the suite -----------------------------------------------------------


def bound_suite(
    H: Hypergraph,
    tol: float = TOL,
    path_cap: int | None = DEFAULT_CAP,
    cheeger_cap: int = CHEEGER_CAP,
) -> VerificationReport:
    f = _Facts(H, path_cap, cheeger_cap)
    records: list[Record] = []
    for group in (
        _laplacian_identities,
        _laplacian_bounds,
        _components_and_trees,
        _structure_lemmas,
        _diameter_records,
        _signless_records,
        _normalized_records,
        _cheeger_records,
        _discrepancy_records,
        _subset_distance_records,
    ):
        records.extend(group(f, tol))
    return VerificationReport(fingerprint(H), emit_hypergraph(H), records)


def _laplacian_identities(f: _Facts, tol):
    H, k = f.H, f.k
    L = f.UL.exact()
    out = []
    rows_ok = all(sum(r) == 0 for r in L)
    out.append(Record("laplacian.row_sums_zero", True, "==", max((abs(sum(r)) for r in L), default=0), 0, rows_ok, 0.0))
    if k >= 2:
        picks = sorted({(0, 0), (0, k - 1), (k - 1, k - 1), (k // 2, 1), (1, k // 2)})
        vals = [cofactor_exact(f.UL, i, j) for i, j in picks]
        out.append(Record("laplacian.cofactors_equal", True, "==", vals[0], vals[-1], len(set(vals)) == 1, 0.0,
                          note=f"positions {picks}"))
    else:
        out.append(na("laplacian.cofactors_equal", "k < 2"))
    trace = f.UL.trace()
    out.append(compare("laplacian.trace_volume", trace, "==", f.vol - f.loops_total))
    out.append(compare("laplacian.trace_partitions", trace, "==", 2 * weighted_partition_count(H)))
    out.append(compare("laplacian.eigenvalue_sum", float(sum(f.nu.values)), "==", trace, tol * (1 + abs(trace))))
    sq = int(np.trace(f.UL.data @ f.UL.data))
    formula = 2 * sum(m * m * tau_size(len(e)) for e, m in H.edges if len(e) > 1)
    formula += sum((f.H.degree_table[(v,)][0] - H.loops.get(v, 0)) ** 2 for v in H.vertices)
    formula += sum(f.dstar[i] ** 2 for i, p in enumerate(H.index) if len(p) > 1)
    out.append(compare("laplacian.square_sum", sq, "==", formula))
    out.append(compare("laplacian.square_sum_numeric", float(sum(x * x for x in f.nu.values)), "==", sq,
                       tol * (1 + sq)))
    sizes = {len(e) for e, _ in H.edges}
    if f.loopless and len(sizes) == 1:
        m = sizes.pop()
        big = sum(f.dstar[i] for i, p in enumerate(H.index) if len(p) >= 2)
        out.append(compare("laplacian.uniform_edge_count", H.edge_count, "==", Fraction(trace - big, m)))
    else:
        out.append(na("laplacian.uniform_edge_count", "needs a loopless uniform hypergraph with an edge"))
    return out


def _laplacian_bounds(f: _Facts, tol):
    H, k = f.H, f.k
    out = []
    if not f.simple:
        for name in ("laplacian.positive_semidefinite", "laplacian.rank_equals_arc_rank",
                     "laplacian.fiedler_min_degree", "laplacian.min_degree_partitions",
                     "laplacian.degree_majorization", "laplacian.mean_degree_lower",
                     "laplacian.mean_degree_upper", "laplacian.largest_at_most_k",
                     "laplacian.largest_adjacent_degree_sum", "laplacian.largest_neighbour_average",
                     "laplacian.largest_lower_pair", "laplacian.nonadjacent_pair",
                     "laplacian.noncomplete_fiedler", "laplacian.diameter_fiedler_upper"):
            out.append(na(name, "needs a simple hypergraph"))
        out.extend(_interlacing(f, tol))
        return out
    nu = f.nu
    ds = f.dstar
    out.append(compare("laplacian.positive_semidefinite", nu.nu(k), ">=", 0, tol * (1 + f.UL.frobenius())))
    out.append(compare("laplacian.rank_equals_arc_rank", f.k - exact_multiplicity(f.UL, 0), "==",
                       rank_exact(arc_incidence(H).exact()) if H.edges else 0))
    mstar = min(ds)
    if k >= 2:
        out.append(compare("laplacian.fiedler_min_degree", nu.nu(k - 1), "<=", Fraction(k * mstar, k - 1)))
        out.append(compare("laplacian.min_degree_partitions", Fraction(k * mstar, k - 1), "<=",
                           Fraction(2 * partition_count(H), k - 1)))
    else:
        out.append(na("laplacian.fiedler_min_degree", "k < 2"))
        out.append(na("laplacian.min_degree_partitions", "k < 2"))
    desc = sorted(ds, reverse=True)
    worst, worst_t = math.inf, 0
    acc_nu = acc_d = 0.0
    for t in range(k):
        acc_nu += nu.values[t]
        acc_d += desc[t]
        if acc_nu - acc_d < worst:
            worst, worst_t = acc_nu - acc_d, t + 1
    out.append(Record("laplacian.degree_majorization", True, ">=", None, None, worst >= -tol * (1 + f.vol), worst,
                      note=f"tightest prefix t={worst_t}"))
    mean = Fraction(f.vol, k)
    if k >= 2:
        out.append(compare("laplacian.mean_degree_lower", (k - 1) / k * nu.nu(k - 1), "<=", mean))
    else:
        out.append(na("laplacian.mean_degree_lower", "k < 2"))
    out.append(compare("laplacian.mean_degree_upper", mean, "<=", (k - 1) / k * nu.nu(1)))
    out.append(compare("laplacian.largest_at_most_k", nu.nu(1), "<=", k))
    pairs = list(f.G.multiplicity)
    if pairs:
        out.append(compare("laplacian.largest_adjacent_degree_sum", nu.nu(1), "<=",
                           max(ds[i] + ds[j] for i, j in pairs)))
        zeta = [Fraction(sum(ds[j] for j in f.adj[i]), len(f.adj[i])) if f.adj[i] else Fraction(0) for i in range(k)]
        best = max(Fraction(ds[i] * (ds[i] + zeta[i]) + ds[j] * (ds[j] + zeta[j]), ds[i] + ds[j]) for i, j in pairs)
        out.append(compare("laplacian.largest_neighbour_average", nu.nu(1), "<=", best))
    else:
        out.append(na("laplacian.largest_adjacent_degree_sum", "no adjacent parts"))
        out.append(na("laplacian.largest_neighbour_average", "no adjacent parts"))
    if k >= 2:
        U = unified_matrix(H).exact()
        low = max(math.sqrt((ds[i] - ds[j]) ** 2 + 4 * U[i][j]) for i, j in combinations(range(k), 2))
        out.append(compare("laplacian.largest_lower_pair", nu.nu(1), ">=", low))
    else:
        out.append(na("laplacian.largest_lower_pair", "k < 2"))
    nonadj = [(i, j) for i, j in combinations(range(k), 2) if j not in f.adj[i]]
    if nonadj:
        half = min(Fraction(ds[i] + ds[j], 2) for i, j in nonadj)
        out.append(compare("laplacian.nonadjacent_pair", nu.nu(k - 1), "<=", half))
        out.append(compare("laplacian.noncomplete_fiedler", nu.nu(k - 1), "<=", k - 2))
    else:
        out.append(na("laplacian.nonadjacent_pair", "every pair of parts is adjacent"))
        out.append(na("laplacian.noncomplete_fiedler", "associated graph is complete"))
    if f.deeply and k >= 2:
        d = f.diam(DistanceMode.ED)
        half = d // 2
        if half >= 1:
            dmax = max(ds)
            rhs = dmax - 2 * math.sqrt(dmax - 1) + 2 / half * (math.sqrt(dmax - 1) - 1)
            out.append(compare("laplacian.diameter_fiedler_upper", nu.nu(k - 1), "<=", rhs,
                               note=f"exact diameter {d}"))
        else:
            out.append(na("laplacian.diameter_fiedler_upper", "exact diameter below 2"))
    else:
        out.append(na("laplacian.diameter_fiedler_upper", "needs deeply connected with k >= 2"))
    out.extend(_interlacing(f, tol))
    return out


def _interlacing(f: _Facts, tol):
    H = f.H
    reports = []
    for e, m in H.edges:
        if len(e) < 2:
            continue
        for r in range(1, m + 1):
            rep = interlacing_check(H, e, r, tol)
            if rep.applicable:
                reports.append((e, r, rep))
    if not reports:
        reason = "no non-loop edge leaves the index set unchanged when removed"
        return [na("laplacian.edge_deletion_interlacing", reason), na("signless.edge_deletion_interlacing", reason)]
    nu_ok = all(rep.nu_holds for _, _, rep in reports)
    xi_ok = all(rep.xi_holds for _, _, rep in reports)
    worst = min(rep.worst_slack for _, _, rep in reports)
    branches = sorted({rep.branch for _, _, rep in reports})
    note = f"{len(reports)} deletions, branches {branches}"
    return [
        Record("laplacian.edge_deletion_interlacing", True, "chain", None, None, nu_ok, worst, note=note),
        Record("signless.edge_deletion_interlacing", True, "chain", None, None, xi_ok, worst, note=note),
    ]


def _components_and_trees(f: _Facts, tol):
    H, k = f.H, f.k
    names = ("laplacian.zero_multiplicity_components", "laplacian.components_corank",
             "laplacian.fiedler_nonzero_iff_deeply", "laplacian.tree_multiplicity_pendants",
             "spanning.cofactor_tree_count", "spanning.eigenvalue_product")
    if not f.simple:
        return [na(n, "needs a simple hypergraph") for n in names]
    out = []
    count = f.classes.count
    try:
        mult0 = multiplicity_of(f.nu, 0.0)
        out.append(compare("laplacian.zero_multiplicity_components", mult0, "==", count))
    except NumericalDisagreementError as exc:
        out.append(Record(names[0], True, "==", None, count, False, None, note=exc.detail))
    rank_r = rank_exact(arc_incidence(H).exact()) if H.edges else 0
    out.append(compare("laplacian.components_corank", count, "==", k - rank_r))
    if k >= 2:
        nonzero = exact_multiplicity(f.UL, 0) == 1
        out.append(iff("laplacian.fiedler_nonzero_iff_deeply", nonzero, f.deeply))
    else:
        out.append(na("laplacian.fiedler_nonzero_iff_deeply", "k < 2"))
    is_tree = f.deeply and f.G.size == k - 1
    if is_tree and k >= 2:
        pend = sum(1 for d in f.dstar if d == 1)
        out.append(compare("laplacian.tree_multiplicity_pendants", max_root_multiplicity(f.poly_L), "<=", pend))
    else:
        out.append(na("laplacian.tree_multiplicity_pendants", "not a non-trivial exact tree"))
    cof = cofactor_exact(f.UL, 0, 0) if k >= 2 else 1
    if k <= DC_MAX_K:
        out.append(compare("spanning.cofactor_tree_count", cof, "==", spanning_tree_count_dc(f.G)))
    else:
        out.append(na("spanning.cofactor_tree_count", f"k > {DC_MAX_K}"))
    prod = math.prod(f.nu.values[: k - 1]) / k if k >= 2 else 1.0
    out.append(compare("spanning.eigenvalue_product", prod, "==", cof, 1e-6 * max(1, cof)))
    return out


def _structure_lemmas(f: _Facts, tol):
    names = ("structure.path_iff", "structure.cycle_iff", "structure.complete_iff", "structure.multipartite_iff")
    if not f.simple:
        return [na(n, "needs a simple hypergraph") for n in names]
    g = f.is_graph
    n = f.H.n
    ga = f.graph_adj
    return [
        iff(names[0], _is_path(f.k, f.adj), g and _is_path(n, ga)),
        iff(names[1], _is_cycle(f.k, f.adj), g and _is_cycle(n, ga)),
        iff(names[2], _is_complete(f.k, f.adj), g and _is_complete(n, ga)),
        iff(names[3], _multipartite_parts(f.k, f.adj) is not None, g and _multipartite_parts(n, ga) is not None),
    ]


_DIAMETER_NAMES = (
    "connectivity.definitional_implications", "connectivity.deeply_implies_uni",
    "diameter.chain_uni", "diameter.chain_strong_uni", "diameter.chain_deeply_inter_uni",
    "diameter.chain_set_vs_strong_uni", "diameter.chain_set_vs_strong_edge",
    "diameter.chain_set_vs_strong_exact", "diameter.edge_usage", "diameter.fiedler_lower",
    "diameter.distinct_eigenvalues", "diameter.log_ratio", "diameter.arccosh_ratio", "diameter.sqrt_log",
    "diameter.mixed_lower", "diameter.mixed_chain_unified", "diameter.mixed_chain_strong",
)
_AUDITED = ("connectivity.deeply_implies_uni",)


def _diameter_records(f: _Facts, tol):
    out = []
    M = DistanceMode
    if not f.loopless:
        return [na(n, "needs a loopless hypergraph", audit=n in _AUDITED) for n in _DIAMETER_NAMES]
    try:
        prof = f.profile
    except SizeCapError as exc:
        return [na(n, exc.detail, audit=n in _AUDITED) for n in _DIAMETER_NAMES]
    except AssertionError as exc:
        bad = Record("connectivity.definitional_implications", True, "implies", None, None, False, None,
                     note=str(exc))
        return [bad] + [na(n, "definitional implications failed", audit=n in _AUDITED)
                        for n in _DIAMETER_NAMES[1:]]
    out.append(Record("connectivity.definitional_implications", True, "implies", None, None, True, None))
    out.append(implies("connectivity.deeply_implies_uni", prof.deeply, prof.uni, audit=True))
    D = {m: f.diam(m) for m in M}

    def gated(name, cond, reason, values):
        out.append(chain(name, values) if cond else na(name, reason))

    gated("diameter.chain_uni", prof.uni, "not uni-connected", [D[M.UD], D[M.IUD], D[M.EED], D[M.ED]])
    gated("diameter.chain_strong_uni", prof.strong_uni, "not strong uni-connected", [D[M.SUD], D[M.SEED], D[M.SED]])
    gated("diameter.chain_deeply_inter_uni", prof.deeply_inter_uni, "not deeply inter-uni-connected",
          [D[M.IUSD], D[M.EESD], D[M.ESD]])
    gated("diameter.chain_set_vs_strong_uni", prof.deeply_inter_uni, "not deeply inter-uni-connected",
          [D[M.IUSD], D[M.SUD], D[M.UD]])
    gated("diameter.chain_set_vs_strong_edge", prof.deeply_edge_exact, "not deeply edge exact connected",
          [D[M.EESD], D[M.SEED], D[M.EED]])
    gated("diameter.chain_set_vs_strong_exact", prof.deeply, "not deeply connected", [D[M.ESD], D[M.SED], D[M.ED]])

    k = f.k
    if f.deeply and k >= 2:
        out.append(compare("diameter.edge_usage", _max_edge_usage(f), "<=", Fraction(k * k, 4)))
    else:
        out.append(na("diameter.edge_usage", "needs deeply connected with k >= 2"))
    simple_deep = f.simple and f.deeply and k >= 2
    nu = f.nu
    if simple_deep and prof.deeply_inter_uni:
        out.append(compare("diameter.fiedler_lower", D[M.ESD], ">=", _ceil(4 / (k * nu.nu(k - 1)))))
    else:
        out.append(na("diameter.fiedler_lower", "needs simple, deeply inter-uni-connected, k >= 2"))
    if f.simple and f.deeply:
        r = distinct_root_count(f.poly_L)
        out.append(compare("diameter.distinct_eigenvalues", D[M.ESD], "<=", r - 1))
    else:
        out.append(na("diameter.distinct_eigenvalues", "needs simple and deeply connected"))
    if simple_deep and not f.complete:
        ratio = (nu.nu(1) + nu.nu(k - 1)) / (nu.nu(1) - nu.nu(k - 1))
        out.append(compare("diameter.log_ratio", D[M.ESD], "<=", 1 + _floor(math.log(k - 1) / math.log(ratio))))
        out.append(compare("diameter.arccosh_ratio", D[M.ESD], "<=",
                           1 + _floor(math.acosh(k - 1) / math.acosh(ratio))))
    else:
        out.append(na("diameter.log_ratio", "needs simple, deeply connected, not complete"))
        out.append(na("diameter.arccosh_ratio", "needs simple, deeply connected, not complete"))
    if simple_deep:
        bound = 2 * _floor(math.sqrt(2 * max(f.dstar) / nu.nu(k - 1)) * math.log2(k))
        out.append(compare("diameter.sqrt_log", D[M.ESD], "<=", bound))
        low = 4 / (k * nu.nu(k - 1)) - D[M.ESD]
        out.append(compare("diameter.mixed_lower", D[M.ED], ">=", low))
        out.append(chain("diameter.mixed_chain_unified", [D[M.UD], D[M.EED], D[M.ED]]))
        out.append(chain("diameter.mixed_chain_strong", [D[M.SUD], D[M.SEED], D[M.SED], D[M.ED]]))
    else:
        for n in ("diameter.sqrt_log", "diameter.mixed_lower", "diameter.mixed_chain_unified",
                  "diameter.mixed_chain_strong"):
            out.append(na(n, "needs simple, deeply connected, k >= 2"))
    return out


def _max_edge_usage(f: _Facts) -> int:
    """Largest number of chosen shortest paths through one edge of the
    associated graph, one BFS path per unordered pair of distinct parts."""
    k = f.k
    adj = [sorted(a) for a in f.adj]
    usage: dict[tuple[int, int], int] = {}
    for s in range(k):
        parent = {s: None}
        queue = [s]
        for x in queue:
            for y in adj[x]:
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        for t in range(s + 1, k):
            x = t
            while parent[x] is not None:
                e = (min(x, parent[x]), max(x, parent[x]))
                usage[e] = usage.get(e, 0) + 1
                x = parent[x]
    return max(usage.values(), default=0)


def _signless_records(f: _Facts, tol):
    H, k = f.H, f.k
    out = []
    trace = f.UQ.trace()
    out.append(compare("signless.trace_volume", trace, "==", f.vol + f.loops_total))
    out.append(compare("signless.trace_partitions", trace, "==", 2 * (weighted_partition_count(H) + f.loops_total)))
    xi = f.xi
    out.append(compare("signless.eigenvalue_sum", float(sum(xi.values)), "==", trace, tol * (1 + abs(trace))))
    mean = Fraction(2 * (weighted_partition_count(H) + f.loops_total), k)
    out.append(compare("signless.mean_lower", xi.nu(k), "<=", mean))
    out.append(compare("signless.mean_upper", mean, "<=", xi.nu(1)))
    if f.loopless:
        classes = f.classes
        expected = classes.trivial_count + classes.bipartite_nontrivial_count
        try:
            out.append(compare("signless.zero_multiplicity", multiplicity_of(xi, 0.0), "==", expected))
        except NumericalDisagreementError as exc:
            out.append(Record("signless.zero_multiplicity", True, "==", None, expected, False, None, note=exc.detail))
    else:
        out.append(na("signless.zero_multiplicity", "needs a loopless hypergraph"))
    simple_names = ("signless.positive_semidefinite", "signless.totally_unimodular",
                    "signless.charpoly_equals_laplacian", "signless.zero_iff_bipartite",
                    "signless.zero_simple_when_bipartite", "signless.largest_vs_partitions",
                    "signless.partitions_equality_iff_regular", "signless.regular_degree_half_largest",
                    "signless.regular_largest_multiplicity", "signless.degree_majorization",
                    "signless.largest_degree_lower", "signless.largest_degree_bounds",
                    "signless.degree_equality_iff_regular", "signless.largest_adjacent_sum_lower",
                    "signless.largest_adjacent_sum", "signless.largest_zero_iff_edgeless",
                    "signless.below_four_iff_exact_paths", "signless.four_iff_cycle_or_claw",
                    "signless.largest_connected_lower", "signless.largest_connected_range")
    if not f.simple:
        return out + [na(n, "needs a simple hypergraph") for n in simple_names]
    ds = f.dstar
    out.append(compare("signless.positive_semidefinite", xi.nu(k), ">=", 0, tol * (1 + f.UQ.frobenius())))
    if not f.odd_cycle and H.edges:
        try:
            tu = is_totally_unimodular(edge_parts_incidence(H).exact(), TU_MAX_MINORS)
            out.append(Record("signless.totally_unimodular", True, "==", tu, True, tu, None))
        except SizeCapError as exc:
            out.append(na("signless.totally_unimodular", exc.detail))
    else:
        out.append(na("signless.totally_unimodular", "has an odd exact cycle or no edges"))
    if not f.odd_cycle:
        same = tuple(f.poly_Q) == tuple(f.poly_L)
        out.append(Record("signless.charpoly_equals_laplacian", True, "==", list(f.poly_Q), list(f.poly_L), same, None))
    else:
        out.append(na("signless.charpoly_equals_laplacian", "has an odd exact cycle"))
    if f.deeply and k >= 2:
        null = exact_multiplicity(f.UQ, 0)
        out.append(iff("signless.zero_iff_bipartite", null > 0, not f.odd_cycle))
        if not f.odd_cycle:
            out.append(compare("signless.zero_simple_when_bipartite", null, "==", 1))
        else:
            out.append(na("signless.zero_simple_when_bipartite", "has an odd exact cycle"))
    else:
        out.append(na("signless.zero_iff_bipartite", "needs deeply connected with k >= 2"))
        out.append(na("signless.zero_simple_when_bipartite", "needs deeply connected with k >= 2"))
    regular = is_subset_regular(H)
    if not f.included:
        q = Fraction(4 * f.tau, k)
        out.append(compare("signless.largest_vs_partitions", xi.nu(1), ">=", q))
        out.append(iff("signless.partitions_equality_iff_regular", _root_at(f.poly_Q, q, xi.nu(1)), regular))
        if regular:
            d = H.degree_table.d[0]
            out.append(Record("signless.regular_degree_half_largest", True, "==", 2 * d, xi.nu(1),
                              _root_at(f.poly_Q, 2 * d, xi.nu(1)), None))
            out.append(compare("signless.regular_largest_multiplicity", exact_multiplicity(f.UQ, 2 * d), "==",
                               f.classes.count))
        else:
            out.append(na("signless.regular_degree_half_largest", "not subset-regular"))
            out.append(na("signless.regular_largest_multiplicity", "not subset-regular"))
    else:
        for n in ("signless.largest_vs_partitions", "signless.partitions_equality_iff_regular",
                  "signless.regular_degree_half_largest", "signless.regular_largest_multiplicity"):
            out.append(na(n, "has an included edge"))
    desc = sorted(ds, reverse=True)
    acc_x = acc_d = 0.0
    worst = math.inf
    for t in range(k):
        acc_x += xi.values[t]
        acc_d += desc[t]
        worst = min(worst, acc_x - acc_d)
    out.append(Record("signless.degree_majorization", True, ">=", None, None, worst >= -tol * (1 + f.vol), worst))
    mstar = min(ds)
    out.append(compare("signless.largest_degree_lower", xi.nu(1), ">=", 2 * mstar))
    out.append(compare("signless.largest_degree_bounds", xi.nu(1), "<=", 2 * f.delta))
    if f.deeply:
        eq = _root_at(f.poly_Q, 2 * mstar, xi.nu(1)) or _root_at(f.poly_Q, 2 * f.delta, xi.nu(1))
        out.append(iff("signless.degree_equality_iff_regular", eq, regular and not f.included))
    else:
        out.append(na("signless.degree_equality_iff_regular", "not deeply connected"))
    pairs = list(f.G.multiplicity)
    if pairs:
        sums = [ds[i] + ds[j] for i, j in pairs]
        out.append(compare("signless.largest_adjacent_sum_lower", xi.nu(1), ">=", min(sums)))
        out.append(compare("signless.largest_adjacent_sum", xi.nu(1), "<=", max(sums)))
    else:
        out.append(na("signless.largest_adjacent_sum_lower", "no edges"))
        out.append(na("signless.largest_adjacent_sum", "no edges"))
    zero = exact_multiplicity(f.UQ, 0) == k
    out.append(iff("signless.largest_zero_iff_edgeless", zero, not H.edges))
    below4 = is_positive_definite([[(4 if i == j else 0) - x for j, x in enumerate(r)] for i, r in enumerate(f.UQ.exact())])
    paths = all(_is_path(len(c.members), _component_adj(f, c.members)) for c in f.classes.classes)
    out.append(iff("signless.below_four_iff_exact_paths", below4, paths))
    if f.deeply:
        four = not below4 and _root_at(f.poly_Q, 4, xi.nu(1))
        g = f.is_graph
        out.append(iff("signless.four_iff_cycle_or_claw", four,
                       g and (_is_cycle(H.n, f.graph_adj) or _is_claw(H.n, f.graph_adj))))
        out.append(compare("signless.largest_connected_lower", xi.nu(1), ">=", 2 + 2 * math.cos(math.pi / k)))
        out.append(compare("signless.largest_connected_range", xi.nu(1), "<=", 2 * k - 2))
    else:
        out.append(na("signless.four_iff_cycle_or_claw", "not deeply connected"))
        out.append(na("signless.largest_connected_lower", "not deeply connected"))
        out.append(na("signless.largest_connected_range", "not deeply connected"))
    return out


def _component_adj(f: _Facts, members):
    pos = f.H.position
    local = {pos[p]: i for i, p in enumerate(members)}
    return [{local[j] for j in f.adj[g]} for g in local]


def _normalized_records(f: _Facts, tol):
    H, k = f.H, f.k
    out = []
    N = f.UNL
    nh = f.nhat
    null = exact_multiplicity(N, 0)
    out.append(compare("normalized.singular", null, ">=", 1))
    if f.loopless:
        cls = f.classes
        try:
            out.append(compare("normalized.two_multiplicity", multiplicity_of(nh, 2.0), "==",
                               cls.bipartite_nontrivial_count))
        except NumericalDisagreementError as exc:
            out.append(Record("normalized.two_multiplicity", True, "==", None, cls.bipartite_nontrivial_count, False,
                              None, note=exc.detail))
        exact_trace = sum(Fraction(r[i], d) for i, (r, d) in enumerate(zip(N.pencil[0], N.pencil[1])) if d)
        out.append(compare("normalized.sum_equals_k_minus_trivial", exact_trace, "==", k - cls.trivial_count))
        out.append(compare("normalized.eigenvalue_sum", float(sum(nh.values)), "==", exact_trace,
                           tol * (1 + k)))
    else:
        for n in ("normalized.two_multiplicity", "normalized.sum_equals_k_minus_trivial",
                  "normalized.eigenvalue_sum"):
            out.append(na(n, "needs a loopless hypergraph"))
    simple_names = ("normalized.zero_multiplicity_components", "normalized.sum_at_most_k",
                    "normalized.sum_k_iff_no_trivial", "normalized.noncomplete_fiedler_at_most_one",
                    "normalized.fiedler_at_most_k_ratio", "normalized.largest_at_least_k_ratio",
                    "normalized.k_ratio_equality_iff_complete", "normalized.largest_at_most_two",
                    "normalized.two_iff_bipartite_class", "normalized.bipartite_iff_symmetric_ends",
                    "normalized.triangle_bound", "normalized.fiedler_diameter_lower",
                    "normalized.fiedler_diameter_upper", "normalized.largest_vs_edges",
                    "normalized.fiedler_one_iff_multipartite", "normalized.second_at_least_one",
                    "normalized.second_one_iff_complete_bipartite", "normalized.largest_vs_subset_volume")
    if not f.simple:
        return out + [na(n, "needs a simple hypergraph") for n in simple_names]
    cls = f.classes
    try:
        out.append(compare("normalized.zero_multiplicity_components", multiplicity_of(nh, 0.0), "==", cls.count))
    except NumericalDisagreementError as exc:
        out.append(Record(simple_names[0], True, "==", None, cls.count, False, None, note=exc.detail))
    trace = k - cls.trivial_count
    if k >= 2:
        out.append(compare("normalized.sum_at_most_k", trace, "<=", k))
        out.append(iff("normalized.sum_k_iff_no_trivial", trace == k, cls.trivial_count == 0))
        if not f.complete:
            out.append(compare("normalized.noncomplete_fiedler_at_most_one", nh.nu(k - 1), "<=", 1))
        else:
            out.append(na("normalized.noncomplete_fiedler_at_most_one", "associated graph is complete"))
        if f.isolated == 0:
            q = Fraction(k, k - 1)
            out.append(compare("normalized.fiedler_at_most_k_ratio", nh.nu(k - 1), "<=", q))
            out.append(compare("normalized.largest_at_least_k_ratio", nh.nu(1), ">=", q))
            eq = _root_at(f.poly_N, q, nh.nu(k - 1)) or _root_at(f.poly_N, q, nh.nu(1))
            out.append(iff("normalized.k_ratio_equality_iff_complete", eq, f.complete))
        else:
            for n in ("normalized.fiedler_at_most_k_ratio", "normalized.largest_at_least_k_ratio",
                      "normalized.k_ratio_equality_iff_complete"):
                out.append(na(n, "has isolated vertices"))
        out.append(compare("normalized.largest_at_most_two", nh.nu(1), "<=", 2))
        two = exact_multiplicity(N, 2) > 0
        out.append(iff("normalized.two_iff_bipartite_class", two, cls.bipartite_nontrivial_count > 0))
    else:
        for n in simple_names[1:9]:
            out.append(na(n, "k < 2"))
    if f.isolated == 0:
        m2 = exact_multiplicity(N, 2)
        out.append(iff("normalized.bipartite_iff_symmetric_ends", not f.odd_cycle, m2 > 0 and m2 == null,
                       note="gated on no isolated vertices"))
    else:
        out.append(na("normalized.bipartite_iff_symmetric_ends", "has isolated vertices"))
    if not (f.deeply and k >= 2):
        return out + [na(n, "needs deeply connected with k >= 2") for n in simple_names[10:]]
    ds = f.dstar
    pairs = list(f.G.multiplicity)
    tri = [len(f.adj[i] & f.adj[j]) for i, j in pairs]
    r = min(tri)
    bound = max(
        1 + (math.sqrt(4 * ds[i] * (sum(ds[j] for j in f.adj[i]) - r) + r * r) - r) / (2 * ds[i]) for i in range(k)
    )
    out.append(compare("normalized.triangle_bound", nh.nu(1), "<=", bound, note=f"r = {r}"))
    esd = f.diam(DistanceMode.ESD)
    out.append(compare("normalized.fiedler_diameter_lower", nh.nu(k - 1), ">=", 1 / (esd * f.vol)))
    if esd >= 4:
        dmax = max(ds)
        rhs = 1 - 2 * math.sqrt(dmax - 1) / dmax * (1 - 2 / esd) + 2 / esd
        out.append(compare("normalized.fiedler_diameter_upper", nh.nu(k - 1), "<=", rhs))
    else:
        out.append(na("normalized.fiedler_diameter_upper", "exact set diameter below 4"))
    out.append(compare("normalized.largest_vs_edges", nh.nu(1), ">=", Fraction(2 * f.tau, 2 * f.tau - f.delta)))
    g = f.is_graph
    multi = g and _multipartite_parts(H.n, f.graph_adj)
    if not f.complete:
        one = _root_at(f.poly_N, 1, nh.nu(k - 1))
        out.append(iff("normalized.fiedler_one_iff_multipartite", one, bool(multi)))
    else:
        out.append(na("normalized.fiedler_one_iff_multipartite", "associated graph is complete"))
    if k >= 3:
        out.append(compare("normalized.second_at_least_one", nh.nu(2), ">=", 1))
        out.append(iff("normalized.second_one_iff_complete_bipartite", _root_at(f.poly_N, 1, nh.nu(2)), multi == 2))
    else:
        out.append(na("normalized.second_at_least_one", "k < 3"))
        out.append(na("normalized.second_one_iff_complete_bipartite", "k < 3"))
    vols = f.family_matrix @ np.array(ds, dtype=np.int64)
    two_tau = 2 * f.tau
    worst = math.inf
    for v in vols:
        v = int(v)
        if v == two_tau:
            continue
        worst = min(worst, nh.nu(1) - two_tau / (v * (two_tau - v)))
    out.append(Record("normalized.largest_vs_subset_volume", True, ">=", None, None, worst >= -tol, worst,
                      note=f"{len(vols)} subsets"))
    return out


def _cheeger_records(f: _Facts, tol):
    names = ("cheeger.at_most_one", "cheeger.lower_sandwich", "cheeger.upper_sandwich", "cheeger.sqrt_bound")
    if not (f.simple and f.deeply and f.k >= 2):
        return [na(n, "needs simple, deeply connected, k >= 2") for n in names]
    if f.k > f.cheeger_cap:
        return [na(n, f"k = {f.k} above the Cheeger search cap {f.cheeger_cap}") for n in names]
    uc = f.cheeger.value
    lam = f.nhat.nu(f.k - 1)
    return [
        compare(names[0], uc, "<=", 1),
        compare(names[1], float(uc) ** 2, "<", 2 * lam),
        compare(names[2], 2 * lam, "<=", 4 * float(uc)),
        compare(names[3], lam, ">", 1 - math.sqrt(1 - float(uc) ** 2)),
    ]


def _pair_tables(f: _Facts):
    """Edge counts between every pair of family subsets.

    ``ordered`` counts each edge of the associated graph once per way of
    placing its ends in (X, Y), so an edge inside X and Y counts twice;
    ``as_set`` counts each edge {S, S'} with one end in X and the other in Y
    once.
    """
    M = f.family_matrix
    pairs = np.array(list(f.G.multiplicity), dtype=np.int64).reshape(-1, 2)
    A = M[:, pairs[:, 0]]
    B = M[:, pairs[:, 1]]
    ordered = A @ B.T + B @ A.T
    AB = A * B
    as_set = ordered - AB @ AB.T
    vol = M @ np.array(f.dstar, dtype=np.int64)
    return ordered, as_set, vol


def _discrepancy_records(f: _Facts, tol):
    names = ("discrepancy.count_identity", "discrepancy.product_bound", "discrepancy.complement_bound",
             "discrepancy.self_pairs", "discrepancy.self_pairs_relaxed")
    if not f.simple:
        return [na(n, "needs a simple hypergraph", audit=(n == names[0])) for n in names]
    if f.vol == 0 or not f.family:
        return [na(n, "no edges or no proper subsets", audit=(n == names[0])) for n in names]
    k = f.k
    nstar = max(abs(1 - x) for x in f.nhat.values[: k - 1]) if k >= 2 else 0.0
    E, E_set, vol = _pair_tables(f)
    V = f.vol
    fam = f.family
    nfam = len(fam)
    mismatched = int(np.count_nonzero(E != E_set))
    records = [Record(names[0], True, "==", mismatched, 0, mismatched == 0, float(-mismatched), audit=True,
                      note="subset pairs where the set count differs from the ordered count")]
    worst = [(math.inf, None)] * 4

    def track(i, slack, where):
        if slack < worst[i][0]:
            worst[i] = (slack, where)

    for a in range(nfam):
        vx = float(vol[a])
        for b in range(nfam):
            vy = float(vol[b])
            dev = abs(E[a, b] - vx * vy / V)
            track(0, nstar * math.sqrt(vx * vy) - dev, (a, b))
            track(1, nstar * math.sqrt(vx * vy * (V - vx) * (V - vy)) / V - dev, (a, b))
        dev = abs(E[a, a] - vx * vx / V)
        mid = nstar * math.sqrt(vx * (V - vx)) / V
        track(2, mid - dev, (a, a))
        track(3, nstar * vx - mid, (a, a))

    def parts(i):
        return [list(f.H.index[j]) for j in fam[i]]

    for n, (w, where) in zip(names[1:], worst):
        note = f"{nfam} subsets, nu* = {nstar:.6g}, ordered edge count"
        if w < -tol:
            note += f"; tightest X = {parts(where[0])}, Y = {parts(where[1])}"
        records.append(Record(n, True, "<=", None, None, w >= -tol, w, note=note))
    return records


def _subset_distance_records(f: _Facts, tol):
    names = ("subset_distance.log_ratio", "subset_distance.arccosh_ratio", "subset_distance.collection_log",
             "subset_distance.collection_two_sided", "subset_distance.collection_shifted")
    if not (f.simple and f.deeply and f.k >= 2):
        return [na(n, "needs simple, deeply connected, k >= 2") for n in names]
    if f.complete:
        return [na(n, "associated graph is complete") for n in names]
    k = f.k
    nh = f.nhat
    l1, lk = nh.nu(1), nh.nu(k - 1)
    D = f.esd_matrix
    fam = f.family
    vol = f.family_matrix @ np.array(f.dstar, dtype=np.int64)
    V = f.vol

    def dist(a, b):
        return D[np.ix_(fam[a], fam[b])].min()

    def logterm(a, b):
        return 0.5 * math.log((V - vol[a]) * (V - vol[b]) / (vol[a] * vol[b]))

    ratio = (l1 + lk) / (l1 - lk)
    w_log = w_cosh = math.inf
    count = 0
    for a, b in combinations(range(len(fam)), 2):
        # the cited graph bound needs X and Y disjoint with X != complement of Y
        if set(fam[a]) & set(fam[b]) or len(fam[a]) + len(fam[b]) == k:
            continue
        count += 1
        d = dist(a, b)
        arg = math.sqrt((V - vol[a]) * (V - vol[b]) / (vol[a] * vol[b]))
        w_log = min(w_log, _ceil(logterm(a, b) / math.log(ratio)) - d)
        w_cosh = min(w_cosh, _ceil(math.acosh(arg) / math.acosh(ratio)) - d)
    out = []
    note = f"{count} disjoint pairs"
    for n, w in ((names[0], w_log), (names[1], w_cosh)):
        out.append(Record(n, count > 0, "<=", None, None, (w >= 0) if count else None,
                          float(w) if count else None, note=note))
    # collections of pairwise disjoint subsets
    collections = []
    singles = [(i,) for i in range(k)]
    for t in (2, 3, 4):
        if t < k:
            collections.append([singles[i] for i in np.linspace(0, k - 1, t).astype(int)])
    best = {names[2]: math.inf, names[3]: math.inf, names[4]: math.inf}
    tried = {n: 0 for n in best}
    for coll in collections:
        t = len(coll)
        cv = [sum(f.dstar[i] for i in c) for c in coll]
        lhs = min(D[np.ix_(coll[i], coll[j])].min() for i in range(t) for j in range(t) if i != j)

        def term(i, j, base):
            return _ceil(0.5 * math.log((V - cv[i]) * (V - cv[j]) / (cv[i] * cv[j])) / math.log(base))

        lt = nh.nu(k - t + 1)
        if 1 - lt >= l1 - 1 and 0 < 1 - lt < 1:
            rhs = max(term(i, j, 1 / (1 - lt)) for i in range(t) for j in range(t) if i != j)
            best[names[2]] = min(best[names[2]], rhs - lhs)
            tried[names[2]] += 1
        if abs(l1 - lt) > ROOT_TOL:
            rhs = max(term(i, j, (l1 + lt) / (l1 - lt)) for i in range(t) for j in range(t) if i != j)
            best[names[3]] = min(best[names[3]], rhs - lhs)
            tried[names[3]] += 1
        opts = []
        for j in range(1, t + 1):
            hi, lo = j + 1, k - t + j - 1
            if not (1 <= hi <= k and 1 <= lo <= k):
                continue
            a_, b_ = nh.nu(hi), nh.nu(lo)
            # the ratio is a contraction factor only when it exceeds one
            if a_ - b_ <= ROOT_TOL:
                continue
            base = (a_ + b_) / (a_ - b_)
            opts.append(max(term(i, jj, base) for i in range(t) for jj in range(t) if i != jj))
        if opts:
            best[names[4]] = min(best[names[4]], min(opts) - lhs)
            tried[names[4]] += 1
    for n in names[2:]:
        if tried[n]:
            out.append(Record(n, True, "<=", None, None, best[n] >= 0, float(best[n]),
                              note=f"{tried[n]} collections"))
        else:
            out.append(na(n, "no collection satisfies the side conditions"))
    return out


def verify_corpus(family, tol: float = TOL, path_cap=DEFAULT_CAP, cheeger_cap: int = CHEEGER_CAP,
                  full: bool = False) -> dict:
    """Run :func:`bound_suite` over a family and aggregate per theorem.

    Hard failures and audit failures are listed per instance; with ``full``
    every report is included as well.
    """
    tally: dict[str, dict] = {}
    failures, audits, reports = [], [], []
    count = 0
    for H in family:
        count += 1
        rep = bound_suite(H, tol, path_cap, cheeger_cap)
        for r in rep.records:
            t = tally.setdefault(r.theorem, {"applicable": 0, "passed": 0, "failed": 0, "audit_failed": 0})
            if not r.applicable:
                continue
            t["applicable"] += 1
            if r.holds:
                t["passed"] += 1
            elif r.audit:
                t["audit_failed"] += 1
            else:
                t["failed"] += 1
        for bucket, recs in ((failures, rep.hard_failures), (audits, rep.audit_failures)):
            for r in recs:
                bucket.append({"fingerprint": rep.fingerprint, "hg": rep.hg, **r.to_dict()})
        if full:
            reports.append(rep.to_dict())
    out = {
        "instances": count,
        "summary": {
            "hard_failures": len(failures),
            "audit_failures": len(audits),
            "applicable": sum(t["applicable"] for t in tally.values()),
            "passed": sum(t["passed"] for t in tally.values()),
        },
        "theorems": dict(sorted(tally.items())),
        "failures": failures,
        "audits": audits,
    }
    if full:
        out["reports"] = reports
    return out
