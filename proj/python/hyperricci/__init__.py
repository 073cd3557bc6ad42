"""Exact Ollivier-Ricci curvature of directed hypergraphs."""

from ._hyperricci import (
    DirectedHypergraph,
    Error,
    curvature,
    curvature_all,
    digraph_lower_bound,
    distance,
    generate,
    head_measure,
    overlap_upper_bound,
    parse,
    serialize,
    tail_measure,
)

__all__ = [
    "DirectedHypergraph",
    "Error",
    "curvature",
    "curvature_all",
    "digraph_lower_bound",
    "distance",
    "generate",
    "head_measure",
    "overlap_upper_bound",
    "parse",
    "serialize",
    "tail_measure",
]
