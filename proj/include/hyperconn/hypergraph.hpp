#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperconn/error.hpp"

namespace hyperconn {

/// An incident (vertex, edge) pair.
struct Flag {
    std::string vertex;
    std::string edge;

    bool operator==(const Flag&) const = default;
};

/// 0/1 matrix with one row per vertex and one column per edge.
struct IncidenceMatrix {
    std::vector<std::string> row_vertices;
    std::vector<std::string> col_edges;
    std::vector<std::vector<std::uint8_t>> cells; // cells[row][col] in {0,1}

    bool same_cells(const IncidenceMatrix& other) const;
    bool operator==(const IncidenceMatrix&) const = default;
};

/// A finite hypergraph: a non-empty vertex set plus a collection of labelled
/// edges, each mapping to a subset of the vertices. Edge labels are the
/// identity of edges; two labels with equal subsets are parallel edges, and
/// subsets may be empty. Vertex ids and edge ids live in separate namespaces,
/// so the same raw string may name both a vertex and an edge.
///
/// Values are immutable after build(); every operation on them is a pure
/// function, so they can be shared freely across threads.
class Hypergraph {
public:
    using EdgeSpec = std::pair<std::string, std::vector<std::string>>;

    /// Validates and constructs. Exactly three rejection cases:
    /// an empty vertex list, a repeated vertex or edge id, and an edge
    /// member that is not a declared vertex.
    static Hypergraph build(const std::vector<std::string>& vertices,
                            const std::vector<EdgeSpec>& edges);

    /// Builds a hypergraph with fresh ids v1..vn / e1..em from a 0/1 matrix
    /// with at least one row.
    static Hypergraph from_incidence_matrix(const IncidenceMatrix& m);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int edge_count() const { return static_cast<int>(edge_names_.size()); }

    /// Insertion order; preserved for deterministic output only.
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const std::vector<std::string>& edge_names() const { return edge_names_; }

    bool has_vertex(const std::string& v) const { return vertex_index_.count(v) != 0; }
    bool has_edge(const std::string& e) const { return edge_index_.count(e) != 0; }
    int vertex_index(const std::string& v) const; // throws UnknownVertex
    int edge_index(const std::string& e) const;   // throws UnknownEdge

    /// Vertex indices of an edge, ascending.
    const std::vector<int>& members(int edge) const { return members_[edge]; }
    /// Edge indices incident with a vertex, ascending.
    const std::vector<int>& incident(int vertex) const { return incident_[vertex]; }
    /// Member vertex names of an edge, sorted by id.
    std::vector<std::string> member_names(const std::string& edge) const;

    int degree(const std::string& v) const;
    int degree_at(int v) const { return static_cast<int>(incident_[v].size()); }
    int edge_cardinality(const std::string& e) const;
    int edge_cardinality_at(int e) const { return static_cast<int>(members_[e].size()); }

    /// One flag per incidence, sorted by (vertex id, edge id).
    std::vector<Flag> flags() const;
    std::size_t flag_count() const;

    int rank() const;   // max edge cardinality; requires at least one edge
    int corank() const; // min edge cardinality; requires at least one edge

    int multiplicity(const std::string& e) const; // parallel copies of e, including e
    bool is_simple() const;
    bool is_uniform(int r) const; // vacuously true when there are no edges
    bool is_regular(int r) const;

    bool is_trivial() const { return vertex_count() == 1; } // single vertex
    bool is_empty() const { return edge_count() == 0; }     // no edges
    bool has_empty_edges() const;
    bool has_isolated_vertices() const;

    IncidenceMatrix incidence_matrix() const;

    /// Labelled equality: same vertex ids, same edge ids, same subsets.
    /// Insertion order is not significant.
    bool operator==(const Hypergraph& other) const;
    bool operator!=(const Hypergraph& other) const { return !(*this == other); }

private:
    Hypergraph() = default;

    std::vector<std::string> vertex_names_;
    std::vector<std::string> edge_names_;
    std::unordered_map<std::string, int> vertex_index_;
    std::unordered_map<std::string, int> edge_index_;
    std::vector<std::vector<int>> members_;  // edge -> sorted vertex indices
    std::vector<std::vector<int>> incident_; // vertex -> sorted edge indices
};

} // namespace hyperconn
