#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperconn/hypergraph.hpp"

namespace hyperconn {

/// The bipartite incidence graph of a hypergraph: one node per vertex
/// (v-node) and one per edge (e-node), linked exactly by the flags. Simple
/// and bipartite by construction; an empty edge becomes an isolated e-node.
///
/// Nodes are numbered 0..n-1 (v-side, in vertex insertion order) and
/// n..n+m-1 (e-side, in edge insertion order). The two sides are separate
/// namespaces: a vertex and an edge may carry the same raw name.
class BipartiteIncidenceGraph {
public:
    static BipartiteIncidenceGraph of(const Hypergraph& h);

    int v_count() const { return n_v_; }
    int e_count() const { return n_e_; }
    int node_count() const { return n_v_ + n_e_; }
    bool is_v_node(int x) const { return x < n_v_; }
    bool is_e_node(int x) const { return x >= n_v_; }

    int v_node(const std::string& vertex) const; // throws UnknownVertex
    int e_node(const std::string& edge) const;   // throws UnknownEdge
    const std::string& node_name(int x) const;
    std::string node_label(int x) const; // "v:name" / "e:name", for diagnostics

    const std::vector<int>& neighbors(int x) const { return adj_[x]; }
    bool adjacent(int x, int y) const;
    std::size_t link_count() const;
    /// All links as (v-node, e-node), ascending.
    std::vector<std::pair<int, int>> links() const;

    /// Same node, the other side removed. Keeps names and numbering of the
    /// surviving nodes compacted; used by definitional connectivity checks.
    BipartiteIncidenceGraph without_node(int x) const;

    bool operator==(const BipartiteIncidenceGraph& other) const;

private:
    int n_v_ = 0;
    int n_e_ = 0;
    std::vector<std::string> v_names_, e_names_;
    std::vector<std::vector<int>> adj_; // sorted neighbor lists
};

/// Connected components as node-id classes, each sorted, ordered by smallest
/// member.
std::vector<std::vector<int>> graph_components(const BipartiteIncidenceGraph& g);

/// Articulation nodes: removal increases the component count. Single
/// depth-first pass with low-link values.
std::vector<int> graph_cut_vertices(const BipartiteIncidenceGraph& g);

struct GraphBlock {
    std::vector<int> nodes;                 // sorted
    std::vector<std::pair<int, int>> links; // sorted (v-node, e-node)
    bool trivial() const { return links.empty(); } // an isolated node
};

/// Maximal 2-connected link classes, bridges as 2-node blocks, and isolated
/// nodes as degenerate no-link blocks; together they cover every link exactly
/// once and every node at least once.
struct GraphBlockStructure {
    std::vector<GraphBlock> blocks;               // sorted by node vector
    std::vector<int> cut_vertices;                // sorted
    std::vector<std::pair<int, int>> block_tree;  // (cut node, block index), sorted
};

GraphBlockStructure graph_blocks(const BipartiteIncidenceGraph& g);

/// Reads a subgraph of the incidence graph back as a hypergraph when possible:
/// the node subset must contain a v-node and every selected e-node must keep
/// all of its incident links. Links must join selected nodes (else the pair is
/// not a subgraph at all).
std::optional<Hypergraph> recognize_hypersubgraph(const BipartiteIncidenceGraph& g,
                                                  const std::vector<int>& nodes,
                                                  const std::vector<std::pair<int, int>>& links);

/// Simple graph on the edge ids; two distinct edges are linked when they share
/// at least `level` vertices. Level 1 is the ordinary line graph.
struct LineGraph {
    std::vector<std::string> edges;
    std::vector<std::pair<std::string, std::string>> links; // sorted pairs, first < second
};

LineGraph line_graph(const Hypergraph& h, int level = 1);

} // namespace hyperconn
