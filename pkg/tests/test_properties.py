"""Property tests over random small hypergraphs."""
import itertools

import numpy as np
import sympy
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from oracles import assoc_nx, brute_isomorphic, spanning_trees_dc

from unihyper import (
    INF,
    Hypergraph,
    arc_incidence,
    bound_suite,
    canonical_form,
    char_poly_exact,
    de_components,
    degrees,
    diameter,
    edge_parts_incidence,
    eigenvalues_sym,
    emit_hypergraph,
    exact_spanning_pairs_count,
    interlacing_check,
    is_isomorphic,
    matrix_rank,
    multiplicity_of,
    parse_hypergraph,
    set_distance,
    unified_laplacian,
    unified_normalized_laplacian,
    unified_signless_laplacian,
)
from unihyper.core import tau_size
from unihyper.paths import connectedness_profile, has_odd_exact_cycle

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def hypergraphs(draw, max_n=6, max_size=4, max_edges=5, multi=False):
    n = draw(st.integers(2, max_n))
    pool = [e for s in range(2, min(max_size, n) + 1) for e in itertools.combinations(range(1, n + 1), s)]
    chosen = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=max_edges, unique=True))
    if multi:
        return Hypergraph({e: draw(st.integers(1, 3)) for e in chosen}, range(1, n + 1))
    return Hypergraph(chosen, range(1, n + 1))


def tau_total(H):
    return sum(m * tau_size(len(e)) for e, m in H.edges)


@SETTINGS
@given(hypergraphs(multi=True))
def test_laplacian_trace_identities(H):
    L = [list(r) for r in unified_laplacian(H).exact()]
    d = degrees(H).d_star
    assert all(sum(r) == 0 for r in L)
    assert sum(L[i][i] for i in range(len(L))) == sum(d) == 2 * tau_total(H)
    # trace of the square: squared degrees plus every squared off-diagonal entry
    sq = sum(L[i][j] * L[j][i] for i in range(len(L)) for j in range(len(L)))
    off = sum(L[i][j] ** 2 for i in range(len(L)) for j in range(len(L)) if i != j)
    assert sq == sum(x * x for x in d) + off
    vals = eigenvalues_sym(unified_laplacian(H)).values
    assert abs(sum(vals) - sum(d)) < 1e-8
    assert abs(sum(v * v for v in vals) - sq) < 1e-8 * max(1, sq)


@SETTINGS
@given(hypergraphs())
def test_incidence_factorizations(H):
    R = np.array(arc_incidence(H).exact())
    B = np.array(edge_parts_incidence(H).exact())
    assert (R @ R.T == unified_laplacian(H).data).all()
    assert (B @ B.T == unified_signless_laplacian(H).data).all()


@SETTINGS
@given(hypergraphs(multi=True))
def test_zero_multiplicity_counts_components(H):
    L = unified_laplacian(H)
    comps = de_components(H).count
    assert L.order - matrix_rank(L) == comps
    assert multiplicity_of(eigenvalues_sym(L), 0) == comps
    assert min(eigenvalues_sym(L).values) > -1e-9


@SETTINGS
@given(hypergraphs())
def test_normalized_trace_and_range(H):
    t = sum(1 for x in degrees(H).d_star if x == 0)
    vals = eigenvalues_sym(unified_normalized_laplacian(H)).values
    assert abs(sum(vals) - (H.k - t)) < 1e-8
    assert max(vals) <= 2 + 1e-9 and min(vals) >= -1e-9


@SETTINGS
@given(hypergraphs())
def test_bipartite_charpoly(H):
    Q = unified_signless_laplacian(H)
    odd = has_odd_exact_cycle(H)
    if de_components(H).count == 1:
        xi_k = min(eigenvalues_sym(Q).values)
        assert (abs(xi_k) < 1e-9) == (not odd)
    if not odd:
        assert char_poly_exact(Q).coeffs == char_poly_exact(unified_laplacian(H)).coeffs


@SETTINGS
@given(hypergraphs())
def test_signless_zero_multiplicity(H):
    P = de_components(H)
    Q = unified_signless_laplacian(H)
    expected = P.trivial_count + P.bipartite_nontrivial_count
    assert Q.order - matrix_rank(Q) == expected
    assert multiplicity_of(eigenvalues_sym(Q), 0) == expected


@SETTINGS
@given(hypergraphs(max_n=5, max_edges=4))
def test_cofactor_counts_trees(H):
    if H.k > 10:
        return
    assert exact_spanning_pairs_count(H) == spanning_trees_dc(assoc_nx(H))
    x = sympy.Symbol("x")
    L = sympy.Matrix([[int(v) for v in r] for r in unified_laplacian(H).exact()])
    assert list(char_poly_exact(unified_laplacian(H)).coeffs) == [int(c) for c in L.charpoly(x).all_coeffs()]


@SETTINGS
@given(hypergraphs(max_n=5, max_edges=4))
def test_set_distance_is_metric(H):
    if de_components(H).count != 1:
        return
    idx = H.index
    D = {(a, b): set_distance(H, a, b) for a in idx for b in idx}
    for a, b in itertools.product(idx, idx):
        assert D[a, b] == D[b, a]
        assert (D[a, b] == 0) == (a == b)
    for a, b, c in itertools.product(idx, idx, idx):
        assert D[a, c] <= D[a, b] + D[b, c]


@SETTINGS
@given(hypergraphs(max_n=5, max_edges=4))
def test_mode_monotonicity(H):
    chains = [
        ("UD", "IUD", "EED", "ED"),
        ("SUD", "SEED", "SED"),
        ("IUSD", "EESD", "ESD"),
        ("IUSD", "SUD", "UD"),
        ("EESD", "SEED", "EED"),
        ("ESD", "SED", "ED"),
    ]
    D = {}
    for chain in chains:
        vals = [D.setdefault(m, diameter(H, m)) for m in chain]
        if INF not in vals:
            assert vals == sorted(vals, reverse=True), (chain, vals)
    prof = connectedness_profile(H)
    assert prof.violations() == []


@SETTINGS
@given(hypergraphs(multi=True), st.randoms(use_true_random=False))
def test_relabelling(H, rnd):
    perm = list(H.vertices)
    rnd.shuffle(perm)
    f = dict(zip(H.vertices, perm))
    H2 = Hypergraph({tuple(f[v] for v in e): m for e, m in H.edges}, H.vertices)
    assert canonical_form(H) == canonical_form(H2)
    assert char_poly_exact(unified_laplacian(H)).coeffs == char_poly_exact(unified_laplacian(H2)).coeffs


@settings(max_examples=40, deadline=None)
@given(hypergraphs(max_n=4, max_edges=3), hypergraphs(max_n=4, max_edges=3))
def test_isomorphism_matches_brute_force(H1, H2):
    assert is_isomorphic(H1, H2) == brute_isomorphic(H1, H2)


@SETTINGS
@given(hypergraphs(multi=True))
def test_round_trip(H):
    text = emit_hypergraph(H)
    assert parse_hypergraph(text).hypergraph == H


@SETTINGS
@given(hypergraphs(), st.data())
def test_interlacing_on_duplicated_edge(H, data):
    e, _ = data.draw(st.sampled_from(H.edges))
    r = data.draw(st.integers(1, 2))
    doubled = Hypergraph({**dict(H.edges), e: 1 + r})
    rep = interlacing_check(doubled, e, r)
    assert rep.applicable and rep.holds


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(hypergraphs(max_n=5, max_edges=4))
def test_report_shape_and_determinism(H):
    a = bound_suite(H)
    b = bound_suite(H)
    assert a.to_json() == b.to_json()
    assert [r.theorem for r in a.records] == [r.theorem for r in bound_suite(Hypergraph([(1, 2)])).records]
    for r in a.records:
        assert r.status in ("inapplicable", "pass", "fail", "audit-fail")
        assert (r.status == "audit-fail") <= r.audit
