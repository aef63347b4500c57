"""Square roots of graphs under girth constraints."""

from graphroots._core import (
    Graph,
    GraphRootsError,
    build_reduction,
    check_square_root,
    extract_partition,
    find_roots,
    girth,
    is_isomorphic,
    max_weight_clique,
    maximal_cliques,
    parse_edge_list,
    power,
    recognize_bipartite_c4c6free,
    recognize_girth6,
    recognize_root7,
    root_with_edge,
    root_with_neighborhood,
    square,
    to_edge_list,
    validate_splitting,
)

__all__ = [
    "Graph",
    "GraphRootsError",
    "build_reduction",
    "check_square_root",
    "extract_partition",
    "find_roots",
    "girth",
    "is_isomorphic",
    "max_weight_clique",
    "maximal_cliques",
    "parse_edge_list",
    "power",
    "recognize_bipartite_c4c6free",
    "recognize_girth6",
    "recognize_root7",
    "root_with_edge",
    "root_with_neighborhood",
    "square",
    "to_edge_list",
    "validate_splitting",
]
