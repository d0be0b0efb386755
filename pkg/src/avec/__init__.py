"""Exact eccentricity statistics, extremal graph generators, and
replayable certificates for average-eccentricity bounds."""

from .bounds import (
    BOUND_C4C5,
    BOUND_C4C5_MAX,
    BOUND_EQ1,
    BOUND_G6,
    BOUND_G6_MAX,
    BOUND_LOWER,
    BOUND_PATH,
    FLOAT_TOL,
    analyze,
    audit_balls,
    path_avec,
    sharpness_lower,
    structural_constants,
    upper_bound,
)
from .generators import ChainSpec, LabeledGraph, chain, classic, reiman
from .gf import FiniteField, make_field
from .graph import (
    INFINITE_GIRTH,
    UNREACHABLE,
    Graph,
    ball,
    build_graph,
    distances_from,
    eccentricity_profile,
    edge_distance,
    forbidden_cycle_scan,
    girth,
    induced_subgraph,
    is_connected,
    line_graph,
    power_graph,
    weighted_avec,
)
from .io import (
    format_edgelist,
    from_graph6,
    parse_edgelist,
    read_graph,
    to_graph6,
    write_graph,
)
from .replay import (
    VARIANT_GIRTH6,
    VARIANT_MAXDEG,
    build_matching,
    build_tree,
    compute_weights,
    replay,
    trace_json,
)

__version__ = "0.1.0"

__all__ = [
    "BOUND_C4C5",
    "BOUND_C4C5_MAX",
    "BOUND_EQ1",
    "BOUND_G6",
    "BOUND_G6_MAX",
    "BOUND_LOWER",
    "BOUND_PATH",
    "FLOAT_TOL",
    "INFINITE_GIRTH",
    "UNREACHABLE",
    "VARIANT_GIRTH6",
    "VARIANT_MAXDEG",
    "ChainSpec",
    "FiniteField",
    "Graph",
    "LabeledGraph",
    "analyze",
    "audit_balls",
    "ball",
    "build_graph",
    "build_matching",
    "build_tree",
    "chain",
    "classic",
    "compute_weights",
    "distances_from",
    "eccentricity_profile",
    "edge_distance",
    "forbidden_cycle_scan",
    "format_edgelist",
    "from_graph6",
    "girth",
    "induced_subgraph",
    "is_connected",
    "line_graph",
    "make_field",
    "parse_edgelist",
    "path_avec",
    "power_graph",
    "read_graph",
    "reiman",
    "replay",
    "sharpness_lower",
    "structural_constants",
    "to_graph6",
    "trace_json",
    "upper_bound",
    "weighted_avec",
    "write_graph",
]
