"""Workbench for zero-divisor graphs of finite commutative rings.

Builds finite commutative rings with unity as explicit operation tables,
derives their zero-divisor graphs and annihilator-class compressions, and
computes exact dominating numbers, metric dimensions, and dominant metric
dimensions with a verified branch-and-bound solver.
"""
from .atlas import (
    ATLAS_FAMILIES,
    BUILTIN_PRESENTATIONS,
    CSV_COLUMNS,
    GraphStats,
    RingReport,
    atlas_reports,
    atlas_specs,
    build_report,
    graph_pair,
    reports_to_csv,
    reports_to_json,
)
from .claims import (
    ALL_CLAIM_IDS,
    KNOWN_DISCREPANCIES,
    ClaimContext,
    ClaimResult,
    run_claims,
)
from .errors import (
    Disconnected,
    EmptyGraphUndefined,
    InconsistentPresentation,
    MalformedGraphFile,
    NonOrientableRelation,
    NonPrimePowerGF,
    NonTerminating,
    NotPrime,
    OrderOutOfRange,
    SpecSyntaxError,
    TooLarge,
    UndefinedForEmptyGraph,
    UnknownVariable,
    WorkbenchError,
)
from .graphs import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    graph_from_edge_list_text,
    path_graph,
    star_graph,
)
from .quotient import RingPresentation
from .rings import FiniteRing, build_gf, build_product, build_zn, ring_order_cap
from .ringspec import build_ring, canonical, parse_ring_spec
from .solver import (
    MODES,
    SolveResult,
    brute_force_oracle,
    dominant_metric_dimension,
    dominating_number,
    is_dominating,
    is_resolving,
    metric_dimension,
    solve_mode,
)
from .zdg import (
    AnnClass,
    AnnClassPartition,
    CompressedGraph,
    ZeroDivisorGraph,
    ann_classes,
    build_czdg,
    build_zdg,
)

__version__ = "0.1.0"

__all__ = [
    "ATLAS_FAMILIES",
    "ALL_CLAIM_IDS",
    "AnnClass",
    "AnnClassPartition",
    "BUILTIN_PRESENTATIONS",
    "CSV_COLUMNS",
    "ClaimContext",
    "ClaimResult",
    "CompressedGraph",
    "Disconnected",
    "EmptyGraphUndefined",
    "FiniteRing",
    "Graph",
    "GraphStats",
    "InconsistentPresentation",
    "KNOWN_DISCREPANCIES",
    "MODES",
    "MalformedGraphFile",
    "NonOrientableRelation",
    "NonPrimePowerGF",
    "NonTerminating",
    "NotPrime",
    "OrderOutOfRange",
    "RingPresentation",
    "RingReport",
    "SolveResult",
    "SpecSyntaxError",
    "TooLarge",
    "UndefinedForEmptyGraph",
    "UnknownVariable",
    "WorkbenchError",
    "ZeroDivisorGraph",
    "ann_classes",
    "atlas_reports",
    "atlas_specs",
    "brute_force_oracle",
    "build_czdg",
    "build_gf",
    "build_product",
    "build_report",
    "build_ring",
    "build_zdg",
    "build_zn",
    "canonical",
    "complete_bipartite_graph",
    "complete_graph",
    "cycle_graph",
    "dominant_metric_dimension",
    "dominating_number",
    "graph_from_edge_list_text",
    "graph_pair",
    "is_dominating",
    "is_resolving",
    "metric_dimension",
    "parse_ring_spec",
    "path_graph",
    "reports_to_csv",
    "reports_to_json",
    "ring_order_cap",
    "run_claims",
    "solve_mode",
    "star_graph",
]
