"""Hypergraph connectivity: duals, incidence graphs, walks, cut edges,
blocks, and an exhaustive verification sweep over small instances."""

from hyperconn._core import (  # noqa: F401
    Hypergraph,
    HypergraphError,
    are_isomorphic,
    block_graph,
    block_graph_dot,
    blocks,
    brute_separating,
    classify_cut_edge,
    classify_walk,
    components,
    cut_edges,
    cut_vertices,
    decompose_check,
    delete_edge,
    delete_vertex,
    dual,
    dual_closed_walk,
    emit,
    enumerate_cycles,
    find_path,
    incidence_dot,
    induced_hypersubgraph_edges,
    induced_hypersubgraph_vertices,
    induced_subhypergraph,
    intersection,
    is_connected,
    is_cut_vertex,
    is_nonseparable,
    is_separating_vertex,
    law_names,
    line_graph,
    line_graph_dot,
    omega,
    parse,
    separating_vertices,
    strong_delete_edge,
    strong_delete_vertex,
    trace,
    union,
    verify,
    weak_cut_edges_in_nonseparable,
)

__all__ = [name for name in dir() if not name.startswith("_")]
