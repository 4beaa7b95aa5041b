#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperconn/derive.hpp"
#include "hyperconn/hypergraph.hpp"

namespace hyperconn {

/// The block decomposition: blocks are the maximal non-separable pieces. They
/// pairwise share no edge and at most one vertex, their edges partition the
/// edge collection, and a vertex is separating exactly when it lies in more
/// than one block. For connected input the block graph (separating vertices
/// vs. blocks) is a tree; for disconnected input it is a forest, one tree per
/// component.
struct BlockDecomposition {
    std::vector<SubhypergraphWitness> blocks;            // sorted by vertex list
    std::vector<std::string> separating;                 // sorted
    std::vector<std::pair<std::string, int>> block_graph_links; // (separating vertex, block index)
};

/// Connected, no empty edges, no separating vertices.
bool is_nonseparable(const Hypergraph& h);

/// Decomposes a hypergraph without empty edges into blocks, per component.
/// Computed on the incidence graph: its biconnected pieces are merged along
/// shared e-nodes; each merged cluster, read back as a hypergraph, is one
/// block. An isolated vertex yields the trivial edgeless block.
BlockDecomposition blocks(const Hypergraph& h);

/// The block decomposition of a connected hypergraph, whose block graph is
/// then a tree.
BlockDecomposition block_graph(const Hypergraph& h);

/// In a non-separable hypergraph with at least two edges of two or more
/// vertices, every articulation node of the incidence graph is an e-node and
/// names a weak cut edge. Returns those edge ids, ascending.
std::vector<std::string> weak_cut_edges_in_nonseparable(const Hypergraph& h);

} // namespace hyperconn
