"""Cartesian products, sections, colorings, and prime factorization of hypergraphs."""

from .coloring import (
    Coloring,
    EdgeColoring,
    chromatic_index,
    chromatic_number,
    combine_colorings,
    has_colored_hyperedge_property,
    minimal_coloring,
    verify_coloring,
)
from .core import (
    Graph,
    Hypergraph,
    canonical_json,
    from_structured,
    is_connected,
    is_valid_vertex,
    parse_hypergraph,
    serialize_hypergraph,
    stats,
    to_structured,
)
from .errors import (
    DisconnectedError,
    HypergraphError,
    InternalInconsistencyError,
    InvalidSectionError,
    LimitExceededError,
    NotConformalError,
    ParseError,
    ValidationError,
)
from .graphfactor import (
    EdgeClassPartition,
    GraphFactorization,
    SquareSpan,
    all_pairs_distances,
    count_induced_squares,
    factor_graph,
    product_edge_classes,
    project,
    theta_related,
)
from .hyperfactor import HypergraphFactorization, factor_hypergraph
from .iso import (
    IsoWitness,
    are_isomorphic,
    l2_isomorphic,
    random_conformal_hypergraph,
)
from .product import (
    combine_vertices,
    graph_product,
    hyper_product,
    l2_product,
    render_vertex,
    vertex_parts,
)
from .sections import (
    ConformalityReport,
    L2Section,
    inverse_l2,
    is_conformal,
    l2_section,
    maximal_cliques,
    subsection,
    two_section,
)

__version__ = "0.1.0"

__all__ = [
    "Hypergraph",
    "Graph",
    "parse_hypergraph",
    "serialize_hypergraph",
    "to_structured",
    "from_structured",
    "canonical_json",
    "is_valid_vertex",
    "stats",
    "is_connected",
    "two_section",
    "l2_section",
    "inverse_l2",
    "subsection",
    "maximal_cliques",
    "is_conformal",
    "L2Section",
    "ConformalityReport",
    "vertex_parts",
    "render_vertex",
    "combine_vertices",
    "hyper_product",
    "graph_product",
    "l2_product",
    "all_pairs_distances",
    "theta_related",
    "count_induced_squares",
    "product_edge_classes",
    "project",
    "factor_graph",
    "SquareSpan",
    "EdgeClassPartition",
    "GraphFactorization",
    "factor_hypergraph",
    "HypergraphFactorization",
    "verify_coloring",
    "chromatic_number",
    "chromatic_index",
    "has_colored_hyperedge_property",
    "combine_colorings",
    "minimal_coloring",
    "Coloring",
    "EdgeColoring",
    "are_isomorphic",
    "l2_isomorphic",
    "random_conformal_hypergraph",
    "IsoWitness",
    "HypergraphError",
    "ParseError",
    "ValidationError",
    "InvalidSectionError",
    "DisconnectedError",
    "NotConformalError",
    "LimitExceededError",
    "InternalInconsistencyError",
]
