"""Connectivity, isolation-free connectivity and super connectivity of
graphs and of their lexicographic products, with closed-form fast paths
checked against brute-force oracles."""

from .cuts import (
    CutCertificate,
    CutScan,
    cut_certificate,
    enumerate_min_vertex_cuts,
    find_non_isolating_min_cut,
    is_k1_vertex_cut,
    is_super_connected,
    is_vertex_cut,
    k1_connectivity,
    least_isolating_cut,
    minimum_k1_cut,
    scan_cuts,
    select_optimal_min_cut,
    vertex_connectivity_oracle,
)
from .families import (
    bowtie_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
)
from .graphs import (
    INFINITY,
    ExtendedNat,
    Graph,
    connected_components,
    is_complete,
    is_connected,
    isolated_vertices,
    min_degree,
    vertex_connectivity,
    vertex_set,
)
from .harness import (
    THEOREM_IDS,
    DiscrepancyCertificate,
    InstanceFamily,
    VerificationReport,
    enumerate_labeled_graphs,
    random_graph,
    validate_certificate,
    verify_theorem,
)
from .io import (
    GraphParseError,
    format_edge_list,
    load_graph,
    parse_edge_list,
    parse_graph6,
    serialize_graph6,
)
from .lexprod import (
    READINGS,
    LexK1Result,
    ProductIndex,
    k1_product_formula,
    lex_connectivity,
    lex_k1_connectivity,
    lex_product,
    lex_super_connected,
    lift_k1_cut,
    lift_min_cut,
)

__version__ = "0.1.0"

__all__ = [
    "CutCertificate",
    "CutScan",
    "DiscrepancyCertificate",
    "ExtendedNat",
    "Graph",
    "GraphParseError",
    "INFINITY",
    "InstanceFamily",
    "LexK1Result",
    "ProductIndex",
    "READINGS",
    "THEOREM_IDS",
    "VerificationReport",
    "bowtie_graph",
    "complete_bipartite",
    "complete_graph",
    "connected_components",
    "cut_certificate",
    "cycle_graph",
    "disjoint_union",
    "empty_graph",
    "enumerate_labeled_graphs",
    "enumerate_min_vertex_cuts",
    "find_non_isolating_min_cut",
    "format_edge_list",
    "is_complete",
    "is_connected",
    "is_k1_vertex_cut",
    "is_super_connected",
    "is_vertex_cut",
    "isolated_vertices",
    "k1_connectivity",
    "k1_product_formula",
    "least_isolating_cut",
    "lex_connectivity",
    "lex_k1_connectivity",
    "lex_product",
    "lex_super_connected",
    "lift_k1_cut",
    "lift_min_cut",
    "load_graph",
    "min_degree",
    "minimum_k1_cut",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "random_graph",
    "scan_cuts",
    "select_optimal_min_cut",
    "serialize_graph6",
    "star_graph",
    "validate_certificate",
    "verify_theorem",
    "vertex_connectivity",
    "vertex_connectivity_oracle",
    "vertex_set",
]
