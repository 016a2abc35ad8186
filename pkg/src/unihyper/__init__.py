"""Unified matrices, spectra, exact paths and spectral bounds for hypergraphs."""
from .assoc import (
    AssociatedGraph,
    DEPartition,
    build_associated_graph,
    de_components,
    exact_subhypergraph,
)
from .core import (
    Hypergraph,
    degrees,
    index_set,
    make_part,
    neighbor_multiplicity,
    partitions2,
    volume,
)
from .errors import (
    HypergraphError,
    InvalidIndexError,
    InvalidInputError,
    NumericalDisagreementError,
    ParseError,
    SizeCapError,
    TruncationError,
    UnsupportedStructureError,
)
from .hgformat import emit_hypergraph, parse_hypergraph
from .invariants.bounds import Record, VerificationReport, bound_suite, verify_corpus
from .invariants.cheeger import cheeger_constant, subset_distance
from .invariants.cospectral import CospectralCatalog, cospectral_scan
from .invariants.enumeration import (
    canonical_form,
    enumerate_hypergraphs,
    is_isomorphic,
    standard_corpus,
)
from .invariants.spanning import (
    enumerate_exact_spanning_pairs,
    exact_spanning_pairs_count,
)
from .matrices import (
    arc_incidence,
    edge_parts_incidence,
    matrix_of_kind,
    unified_degree_matrix,
    unified_laplacian,
    unified_matrix,
    unified_normalized_laplacian,
    unified_signless_laplacian,
)
from .paths import (
    INF,
    DistanceMode,
    connectedness_profile,
    diameter,
    set_distance,
    shortest_path,
    vertex_distance,
)
from .spectra import (
    char_poly_exact,
    eigenvalues_sym,
    interlacing_check,
    matrix_rank,
    multiplicity_of,
)

__version__ = "0.1.0"

__all__ = [
    "INF",
    "AssociatedGraph",
    "CospectralCatalog",
    "DEPartition",
    "DistanceMode",
    "Hypergraph",
    "HypergraphError",
    "InvalidIndexError",
    "InvalidInputError",
    "NumericalDisagreementError",
    "ParseError",
    "Record",
    "SizeCapError",
    "TruncationError",
    "UnsupportedStructureError",
    "VerificationReport",
    "arc_incidence",
    "bound_suite",
    "build_associated_graph",
    "canonical_form",
    "char_poly_exact",
    "cheeger_constant",
    "connectedness_profile",
    "cospectral_scan",
    "de_components",
    "degrees",
    "diameter",
    "edge_parts_incidence",
    "eigenvalues_sym",
    "emit_hypergraph",
    "enumerate_exact_spanning_pairs",
    "enumerate_hypergraphs",
    "exact_spanning_pairs_count",
    "exact_subhypergraph",
    "index_set",
    "interlacing_check",
    "is_isomorphic",
    "make_part",
    "matrix_of_kind",
    "matrix_rank",
    "multiplicity_of",
    "neighbor_multiplicity",
    "parse_hypergraph",
    "partitions2",
    "set_distance",
    "shortest_path",
    "standard_corpus",
    "subset_distance",
    "unified_degree_matrix",
    "unified_laplacian",
    "unified_matrix",
    "unified_normalized_laplacian",
    "unified_signless_laplacian",
    "verify_corpus",
    "vertex_distance",
    "volume",
]
