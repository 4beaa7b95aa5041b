#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperconn/hypergraph.hpp"

namespace hyperconn {

/// Vertex classes under walk connection. Every non-empty edge lies wholly
/// inside one class; empty edges belong to no class and are listed as strays.
struct ComponentPartition {
    std::vector<std::vector<std::string>> classes;   // members sorted; classes by min member
    std::map<std::string, int> edge_assignment;      // non-empty edge id -> class index
    std::vector<std::string> stray_empty_edges;      // sorted
    int omega() const { return static_cast<int>(classes.size()); }
};

ComponentPartition components(const Hypergraph& h);
int omega(const Hypergraph& h);
bool is_connected(const Hypergraph& h);

enum class CutEdgeKind { NotCut, Weak, Strong };
const char* cut_edge_kind_name(CutEdgeKind k);

/// An edge is a cut edge when removing it raises the component count; it is
/// strong when the count lands on the ceiling omega(H) + |e| - 1 (each member
/// in its own part), weak otherwise.
CutEdgeKind classify_cut_edge(const Hypergraph& h, const std::string& edge);

/// The cut edges with their kinds, ascending by id.
std::vector<std::pair<std::string, CutEdgeKind>> cut_edges(const Hypergraph& h);

/// A vertex is a cut vertex when deleting it (and discarding emptied edges)
/// raises the component count. Needs at least two vertices. When no edge
/// equals {v}, this coincides with being an articulation node of the
/// incidence graph, which is the computed route; otherwise the count is
/// recomputed directly.
bool is_cut_vertex(const Hypergraph& h, const std::string& v);
std::vector<std::string> cut_vertices(const Hypergraph& h);

/// A vertex separating a connected hypergraph into two edge-disjoint
/// connected parts meeting only in it. Coincides with being an articulation
/// node of the incidence graph. Requires connected input without empty edges.
bool is_separating_vertex(const Hypergraph& h, const std::string& v);
std::vector<std::string> separating_vertices(const Hypergraph& h);

/// For a cut vertex v with {v} not an edge in a hypergraph without empty
/// edges or isolated vertices: deleting v adds at most deg(v) - 1 components.
/// Returns whether the bound holds (it always should).
bool cut_vertex_bound_check(const Hypergraph& h, const std::string& v);

} // namespace hyperconn
