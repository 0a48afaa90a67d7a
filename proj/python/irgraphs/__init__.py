"""Irredundance parameters and IR-graph reconfiguration for small graphs."""

from ._core import (
    Graph,
    IrGraph,
    analyze,
    are_isomorphic,
    build_disconnected_source,
    build_ir_graph,
    cartesian_product,
    check_theorems,
    diameter,
    disjoint_union,
    distance,
    enumerate_flip_sets,
    external_private_neighbors,
    family,
    find_isomorphism,
    fixture,
    flip_set,
    from_graph6,
    has_induced_c4,
    has_triangle,
    is_complete,
    is_connected,
    is_dominating,
    is_irredundant,
    is_maximal_irredundant,
    is_minimal_dominating,
    lower_irredundance,
    private_neighbors,
    probe_target,
    resolve_graph,
    scan_census,
    token_slide_adjacent,
    universal_vertices,
    upper_irredundance,
)

__all__ = [
    "Graph",
    "IrGraph",
    "analyze",
    "are_isomorphic",
    "build_disconnected_source",
    "build_ir_graph",
    "cartesian_product",
    "check_theorems",
    "diameter",
    "disjoint_union",
    "distance",
    "enumerate_flip_sets",
    "external_private_neighbors",
    "family",
    "find_isomorphism",
    "fixture",
    "flip_set",
    "from_graph6",
    "has_induced_c4",
    "has_triangle",
    "is_complete",
    "is_connected",
    "is_dominating",
    "is_irredundant",
    "is_maximal_irredundant",
    "is_minimal_dominating",
    "lower_irredundance",
    "private_neighbors",
    "probe_target",
    "resolve_graph",
    "scan_census",
    "token_slide_adjacent",
    "universal_vertices",
    "upper_irredundance",
]

__version__ = "0.1.0"
