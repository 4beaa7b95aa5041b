#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperconn/hypergraph.hpp"

namespace hyperconn {

/// A restriction of a parent hypergraph to a vertex subset, together with the
/// injective child-edge -> parent-edge mapping that witnesses it. Every child
/// edge equals its origin's subset intersected with the child's vertex set.
struct SubhypergraphWitness {
    Hypergraph child;
    std::vector<std::pair<std::string, std::string>> edge_origin; // child id -> parent id, sorted
};

/// psi_child(e') == psi_parent(origin(e')) restricted to the child vertices.
bool witness_law_holds(const Hypergraph& parent, const SubhypergraphWitness& w);

// --- deletions -------------------------------------------------------------

/// Removes the edge; the vertex set is untouched (a spanning restriction).
Hypergraph delete_edge(const Hypergraph& h, const std::string& edge);
Hypergraph delete_edges(const Hypergraph& h, const std::vector<std::string>& edges);

/// Removes the vertex from the vertex set and from every edge, then discards
/// edges that became (or already were) empty. Requires a second vertex to
/// survive. Edge ids of the survivors are preserved.
Hypergraph delete_vertex(const Hypergraph& h, const std::string& vertex);

/// Removes the vertex together with every edge containing it.
Hypergraph strong_delete_vertex(const Hypergraph& h, const std::string& vertex);

/// Removes the edge, all of its vertices, and those vertices from every other
/// edge (other edges may become empty and are kept). Fails if no vertex would
/// survive.
Hypergraph strong_delete_edge(const Hypergraph& h, const std::string& edge);

// --- induced restrictions ----------------------------------------------------

/// Keeps the given vertices; every edge meeting them survives as its
/// intersection with the selection, id preserved.
SubhypergraphWitness induced_subhypergraph(const Hypergraph& h,
                                           const std::vector<std::string>& vertices);

/// Keeps the given vertices and exactly the non-empty edges wholly inside them.
Hypergraph induced_hypersubgraph_vertices(const Hypergraph& h,
                                          const std::vector<std::string>& vertices);

/// Keeps the given edges; the vertex set is their union.
Hypergraph induced_hypersubgraph_edges(const Hypergraph& h,
                                       const std::vector<std::string>& edges);

/// Selects every edge wholly inside the given vertex set (empty edges
/// qualify), then restricts to the union of the selected edges. The resulting
/// vertex set can be a proper subset of the selection.
Hypergraph trace(const Hypergraph& h, const std::vector<std::string>& vertices);

// --- union / intersection / dual ---------------------------------------------

/// Shared edge ids must carry equal subsets.
Hypergraph hypergraph_union(const Hypergraph& a, const Hypergraph& b);
Hypergraph hypergraph_intersection(const Hypergraph& a, const Hypergraph& b);

/// True when whole is the union of the two parts and their edge-id sets are
/// disjoint (an edge-disjoint decomposition).
bool decompose_check(const Hypergraph& whole, const Hypergraph& part1, const Hypergraph& part2);

/// Transposes the incidence structure: vertices of the dual are the edge ids,
/// edges of the dual are the vertex ids, and (v,e) is a flag exactly when
/// (e,v) is a flag of the dual. Applying it twice gives back an equal value.
Hypergraph dual(const Hypergraph& h);

// --- structure predicates ------------------------------------------------------

/// child's vertices and edges (with identical subsets) are all present in parent.
bool is_hypersubgraph(const Hypergraph& parent, const Hypergraph& child);

/// Searches for an injective origin mapping realizing child as a restriction
/// of parent. Every hypersubgraph admits one; the converse fails.
std::optional<SubhypergraphWitness> find_subhypergraph_witness(const Hypergraph& parent,
                                                               const Hypergraph& child);

/// candidate spans host's vertex set, is r-regular, and is a hypersubgraph.
bool is_r_factor(const Hypergraph& host, const Hypergraph& candidate, int r);

} // namespace hyperconn
