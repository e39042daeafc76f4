"""Exact tools for rainbow triangle packings in edge-colored complete graphs."""

from ._core import (
    EdgeColoring,
    Graph,
    ResourceExhausted,
    ar_exact,
    ar_formula,
    are_isomorphic,
    build_lower_bound_coloring,
    count_canonical_partitions,
    enumerate_triangles,
    exists_avoiding_coloring,
    extract_rainbow_subgraph,
    generate_graphs,
    graph6_decode,
    graph6_encode,
    has_k_disjoint_triangles,
    has_rainbow_packing,
    join,
    lemma_pairs_extract,
    max_independent_triangles,
    max_matching,
    merge_color_classes,
    moon_ex,
    moon_perturbation_failures,
    random_dense_triangle_free,
    reduce_to_r_colors,
    turan_edges,
    verify_gamma,
    verify_moon,
)

__all__ = [
    "EdgeColoring",
    "Graph",
    "ResourceExhausted",
    "ar_exact",
    "ar_formula",
    "are_isomorphic",
    "build_lower_bound_coloring",
    "count_canonical_partitions",
    "enumerate_triangles",
    "exists_avoiding_coloring",
    "extract_rainbow_subgraph",
    "generate_graphs",
    "graph6_decode",
    "graph6_encode",
    "has_k_disjoint_triangles",
    "has_rainbow_packing",
    "join",
    "lemma_pairs_extract",
    "max_independent_triangles",
    "max_matching",
    "merge_color_classes",
    "moon_ex",
    "moon_perturbation_failures",
    "random_dense_triangle_free",
    "reduce_to_r_colors",
    "turan_edges",
    "verify_gamma",
    "verify_moon",
]

__version__ = "0.1.0"
