#include "hyperconn/incidence_graph.hpp"

#include <algorithm>
#include <set>

namespace hyperconn {

BipartiteIncidenceGraph BipartiteIncidenceGraph::of(const Hypergraph& h) {
    BipartiteIncidenceGraph g;
    g.n_v_ = h.vertex_count();
    g.n_e_ = h.edge_count();
    g.v_names_ = h.vertex_names();
    g.e_names_ = h.edge_names();
    g.adj_.resize(g.node_count());
    for (int e = 0; e < g.n_e_; ++e) {
        int en = g.n_v_ + e;
        for (int v : h.members(e)) {
            g.adj_[v].push_back(en);
            g.adj_[en].push_back(v);
        }
    }
    return g;
}

int BipartiteIncidenceGraph::v_node(const std::string& vertex) const {
    for (int i = 0; i < n_v_; ++i)
        if (v_names_[i] == vertex)
            return i;
    raise(Errc::UnknownVertex, "no vertex '" + vertex + "'");
}

int BipartiteIncidenceGraph::e_node(const std::string& edge) const {
    for (int i = 0; i < n_e_; ++i)
        if (e_names_[i] == edge)
            return n_v_ + i;
    raise(Errc::UnknownEdge, "no edge '" + edge + "'");
}

const std::string& BipartiteIncidenceGraph::node_name(int x) const {
    return is_v_node(x) ? v_names_[x] : e_names_[x - n_v_];
}

std::string BipartiteIncidenceGraph::node_label(int x) const {
    return (is_v_node(x) ? "v:" : "e:") + node_name(x);
}

bool BipartiteIncidenceGraph::adjacent(int x, int y) const {
    const auto& a = adj_[x];
    return std::binary_search(a.begin(), a.end(), y);
}

std::size_t BipartiteIncidenceGraph::link_count() const {
    std::size_t n = 0;
    for (int v = 0; v < n_v_; ++v)
        n += adj_[v].size();
    return n;
}

std::vector<std::pair<int, int>> BipartiteIncidenceGraph::links() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n_v_; ++v)
        for (int e : adj_[v])
            out.emplace_back(v, e);
    std::sort(out.begin(), out.end());
    return out;
}

BipartiteIncidenceGraph BipartiteIncidenceGraph::without_node(int x) const {
    BipartiteIncidenceGraph g;
    std::vector<int> remap(node_count(), -1);
    for (int i = 0; i < node_count(); ++i) {
        if (i == x)
            continue;
        if (is_v_node(i)) {
            remap[i] = static_cast<int>(g.v_names_.size());
            g.v_names_.push_back(v_names_[i]);
        }
    }
    g.n_v_ = static_cast<int>(g.v_names_.size());
    for (int i = 0; i < node_count(); ++i) {
        if (i == x || is_v_node(i))
            continue;
        remap[i] = g.n_v_ + static_cast<int>(g.e_names_.size());
        g.e_names_.push_back(e_names_[i - n_v_]);
    }
    g.n_e_ = static_cast<int>(g.e_names_.size());
    g.adj_.resize(g.node_count());
    for (int i = 0; i < node_count(); ++i) {
        if (i == x)
            continue;
        for (int j : adj_[i])
            if (j != x)
                g.adj_[remap[i]].push_back(remap[j]);
    }
    for (auto& a : g.adj_)
        std::sort(a.begin(), a.end());
    return g;
}

bool BipartiteIncidenceGraph::operator==(const BipartiteIncidenceGraph& other) const {
    auto sorted = [](std::vector<std::string> xs) {
        std::sort(xs.begin(), xs.end());
        return xs;
    };
    if (sorted(v_names_) != sorted(other.v_names_) || sorted(e_names_) != sorted(other.e_names_))
        return false;
    auto name_links = [](const BipartiteIncidenceGraph& g) {
        std::set<std::pair<std::string, std::string>> out;
        for (auto [v, e] : g.links())
            out.insert({g.node_name(v), g.node_name(e)});
        return out;
    };
    return name_links(*this) == name_links(other);
}

std::vector<std::vector<int>> graph_components(const BipartiteIncidenceGraph& g) {
    const int n = g.node_count();
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (cls[s] != -1)
            continue;
        int id = static_cast<int>(classes.size());
        classes.emplace_back();
        cls[s] = id;
        queue.assign(1, s);
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            classes[id].push_back(x);
            for (int y : g.neighbors(x))
                if (cls[y] == -1) {
                    cls[y] = id;
                    queue.push_back(y);
                }
        }
        std::sort(classes[id].begin(), classes[id].end());
    }
    return classes; // discovery from ascending starts => ordered by min member
}

namespace {

// One iterative depth-first pass with low-link values; emits biconnected
// link classes off an edge stack and marks articulation nodes.
GraphBlockStructure block_pass(const BipartiteIncidenceGraph& g) {
    const int n = g.node_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> cut(n, 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<GraphBlock> raw_blocks;
    int timer = 0;

    auto emit_block = [&](std::pair<int, int> until) {
        GraphBlock blk;
        while (true) {
            auto link = estack.back();
            estack.pop_back();
            blk.links.push_back(link);
            blk.nodes.push_back(link.first);
            blk.nodes.push_back(link.second);
            if (link == until)
                break;
        }
        raw_blocks.push_back(std::move(blk));
    };

    struct Frame {
        int u;
        int parent;
        std::size_t next;
    };

    for (int r = 0; r < n; ++r) {
        if (disc[r] != -1)
            continue;
        if (g.neighbors(r).empty()) {
            GraphBlock blk;
            blk.nodes.push_back(r);
            raw_blocks.push_back(std::move(blk));
            disc[r] = timer++;
            continue;
        }
        int root_children = 0;
        disc[r] = low[r] = timer++;
        std::vector<Frame> st{{r, -1, 0}};
        while (!st.empty()) {
            int u = st.back().u;
            int parent = st.back().parent;
            if (st.back().next < g.neighbors(u).size()) {
                int w = g.neighbors(u)[st.back().next++];
                if (w == parent)
                    continue; // the graph is simple, so this skips the tree link once
                if (disc[w] == -1) {
                    estack.emplace_back(u, w);
                    disc[w] = low[w] = timer++;
                    st.push_back({w, u, 0});
                } else if (disc[w] < disc[u]) {
                    estack.emplace_back(u, w);
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                st.pop_back();
                if (parent == -1)
                    continue;
                low[parent] = std::min(low[parent], low[u]);
                if (parent == r)
                    ++root_children;
                if (low[u] >= disc[parent]) {
                    emit_block({parent, u});
                    if (parent != r)
                        cut[parent] = 1;
                }
            }
        }
        if (root_children >= 2)
            cut[r] = 1;
    }

    GraphBlockStructure out;
    for (auto& blk : raw_blocks) {
        std::sort(blk.nodes.begin(), blk.nodes.end());
        blk.nodes.erase(std::unique(blk.nodes.begin(), blk.nodes.end()), blk.nodes.end());
        for (auto& [a, b] : blk.links)
            if (g.is_e_node(a))
                std::swap(a, b); // normalize as (v-node, e-node)
        std::sort(blk.links.begin(), blk.links.end());
    }
    std::sort(raw_blocks.begin(), raw_blocks.end(),
              [](const GraphBlock& a, const GraphBlock& b) { return a.nodes < b.nodes; });
    out.blocks = std::move(raw_blocks);
    for (int x = 0; x < n; ++x)
        if (cut[x])
            out.cut_vertices.push_back(x);
    for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b)
        for (int x : out.blocks[b].nodes)
            if (cut[x])
                out.block_tree.emplace_back(x, b);
    std::sort(out.block_tree.begin(), out.block_tree.end());
    return out;
}

} // namespace

std::vector<int> graph_cut_vertices(const BipartiteIncidenceGraph& g) {
    return block_pass(g).cut_vertices;
}

GraphBlockStructure graph_blocks(const BipartiteIncidenceGraph& g) {
    return block_pass(g);
}

std::optional<Hypergraph> recognize_hypersubgraph(const BipartiteIncidenceGraph& g,
                                                  const std::vector<int>& nodes,
                                                  const std::vector<std::pair<int, int>>& links) {
    std::set<int> node_set;
    for (int x : nodes) {
        if (x < 0 || x >= g.node_count())
            raise(Errc::NotASubgraph, "node id out of range");
        node_set.insert(x);
    }
    std::set<std::pair<int, int>> link_set;
    for (auto [a, b] : links) {
        if (g.is_e_node(a))
            std::swap(a, b);
        if (!node_set.count(a) || !node_set.count(b) || !g.adjacent(a, b) || !g.is_v_node(a) ||
            !g.is_e_node(b))
            raise(Errc::NotASubgraph, "link not induced by the selected nodes");
        link_set.insert({a, b});
    }

    std::vector<std::string> vertices;
    for (int x : node_set)
        if (g.is_v_node(x))
            vertices.push_back(g.node_name(x));
    if (vertices.empty())
        return std::nullopt;

    std::vector<Hypergraph::EdgeSpec> edges;
    for (int x : node_set) {
        if (!g.is_e_node(x))
            continue;
        std::size_t kept = 0;
        std::vector<std::string> mem;
        for (int v : g.neighbors(x)) {
            if (link_set.count({v, x})) {
                ++kept;
                mem.push_back(g.node_name(v));
            }
        }
        if (kept != g.neighbors(x).size())
            return std::nullopt; // e-node must keep its full degree
        std::sort(mem.begin(), mem.end());
        edges.emplace_back(g.node_name(x), std::move(mem));
    }
    return Hypergraph::build(vertices, edges);
}

LineGraph line_graph(const Hypergraph& h, int level) {
    if (level < 1)
        raise(Errc::BadLevel, "line graph level must be at least 1");
    LineGraph lg;
    lg.edges = h.edge_names();
    for (int e = 0; e < h.edge_count(); ++e) {
        for (int f = e + 1; f < h.edge_count(); ++f) {
            const auto& a = h.members(e);
            const auto& b = h.members(f);
            std::vector<int> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(common));
            if (static_cast<int>(common.size()) >= level) {
                std::string x = h.edge_names()[e], y = h.edge_names()[f];
                if (y < x)
                    std::swap(x, y);
                lg.links.emplace_back(std::move(x), std::move(y));
            }
        }
    }
    std::sort(lg.links.begin(), lg.links.end());
    return lg;
}

} // namespace hyperconn
