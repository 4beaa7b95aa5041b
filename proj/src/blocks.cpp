#include "hyperconn/blocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hyperconn/connectivity.hpp"
#include "hyperconn/incidence_graph.hpp"

namespace hyperconn {

bool is_nonseparable(const Hypergraph& h) {
    if (h.has_empty_edges() || !is_connected(h))
        return false;
    return separating_vertices(h).empty();
}

BlockDecomposition blocks(const Hypergraph& h) {
    if (h.has_empty_edges())
        raise(Errc::HasEmptyEdges, "the block decomposition is defined without empty edges");

    BipartiteIncidenceGraph g = BipartiteIncidenceGraph::of(h);
    GraphBlockStructure gb = graph_blocks(g);

    // Union graph blocks along shared e-nodes; v-nodes never merge blocks.
    const int nb = static_cast<int>(gb.blocks.size());
    std::vector<int> parent(nb);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<int, int> first_block_of_enode;
    for (int b = 0; b < nb; ++b)
        for (int x : gb.blocks[b].nodes) {
            if (!g.is_e_node(x))
                continue;
            auto [it, fresh] = first_block_of_enode.emplace(x, b);
            if (!fresh)
                parent[find(b)] = find(it->second);
        }

    std::map<int, std::pair<std::vector<int>, std::vector<std::pair<int, int>>>> clusters;
    for (int b = 0; b < nb; ++b) {
        auto& [nodes, links] = clusters[find(b)];
        nodes.insert(nodes.end(), gb.blocks[b].nodes.begin(), gb.blocks[b].nodes.end());
        links.insert(links.end(), gb.blocks[b].links.begin(), gb.blocks[b].links.end());
    }

    BlockDecomposition out;
    for (auto& [root, cluster] : clusters) {
        auto& [nodes, links] = cluster;
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        auto piece = recognize_hypersubgraph(g, nodes, links);
        if (!piece)
            throw std::logic_error("a merged cluster must keep whole e-nodes");
        std::vector<std::pair<std::string, std::string>> origin;
        for (const auto& e : piece->edge_names())
            origin.emplace_back(e, e);
        std::sort(origin.begin(), origin.end());
        out.blocks.push_back(SubhypergraphWitness{std::move(*piece), std::move(origin)});
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const SubhypergraphWitness& a, const SubhypergraphWitness& b) {
                  auto ka = a.child.vertex_names();
                  auto kb = b.child.vertex_names();
                  std::sort(ka.begin(), ka.end());
                  std::sort(kb.begin(), kb.end());
                  if (ka != kb)
                      return ka < kb;
                  auto ea = a.child.edge_names(), eb = b.child.edge_names();
                  std::sort(ea.begin(), ea.end());
                  std::sort(eb.begin(), eb.end());
                  return ea < eb;
              });

    std::map<std::string, std::vector<int>> blocks_of_vertex;
    for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b)
        for (const auto& v : out.blocks[b].child.vertex_names())
            blocks_of_vertex[v].push_back(b);
    for (auto& [v, bs] : blocks_of_vertex) {
        if (bs.size() < 2)
            continue;
        out.separating.push_back(v);
        for (int b : bs)
            out.block_graph_links.emplace_back(v, b);
    }
    std::sort(out.separating.begin(), out.separating.end());
    std::sort(out.block_graph_links.begin(), out.block_graph_links.end());
    return out;
}

BlockDecomposition block_graph(const Hypergraph& h) {
    if (h.has_empty_edges())
        raise(Errc::HasEmptyEdges, "the block graph is defined without empty edges");
    if (!is_connected(h))
        raise(Errc::NotConnected, "the block graph is defined on connected input");
    return blocks(h);
}

std::vector<std::string> weak_cut_edges_in_nonseparable(const Hypergraph& h) {
    int wide_edges = 0;
    for (int e = 0; e < h.edge_count(); ++e)
        if (h.edge_cardinality_at(e) > 1)
            ++wide_edges;
    if (wide_edges < 2 || !is_nonseparable(h))
        raise(Errc::PreconditionUnmet,
              "needs a non-separable hypergraph with two edges of cardinality > 1");

    BipartiteIncidenceGraph g = BipartiteIncidenceGraph::of(h);
    std::vector<std::string> out;
    for (int x : graph_cut_vertices(g)) {
        if (!g.is_e_node(x))
            throw std::logic_error("a non-separable hypergraph has no articulation v-nodes");
        const std::string& e = g.node_name(x);
        if (classify_cut_edge(h, e) != CutEdgeKind::Weak)
            throw std::logic_error("articulation e-nodes here must be weak cut edges");
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hyperconn
