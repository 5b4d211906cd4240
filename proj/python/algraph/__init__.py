"""Python bindings for the algraph C++ library."""

from ._algraph import (
    AlgraphError,
    Graph,
    NegativeCycleError,
    NoPerfectMatchingError,
    ParseError,
    allowed_edges,
    check_diameter_at_most,
    diameter,
    distances,
    eccentricities,
    has_negative_cycle,
    load_graph,
    mwpm,
    parse_graph,
    radius,
    second_smallest_pm_weight,
    shortest_cycle,
    vertices_on_short_cycles,
)

__all__ = [
    "AlgraphError",
    "Graph",
    "NegativeCycleError",
    "NoPerfectMatchingError",
    "ParseError",
    "allowed_edges",
    "check_diameter_at_most",
    "diameter",
    "distances",
    "eccentricities",
    "has_negative_cycle",
    "load_graph",
    "mwpm",
    "parse_graph",
    "radius",
    "second_smallest_pm_weight",
    "shortest_cycle",
    "vertices_on_short_cycles",
]
