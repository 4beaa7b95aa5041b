#include "hyperconn/connectivity.hpp"

#include <algorithm>
#include <numeric>

#include "hyperconn/derive.hpp"
#include "hyperconn/incidence_graph.hpp"

namespace hyperconn {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

// Vertex classes straight from the walk relation: members of one edge are
// pairwise connected. skip_edge (-1 for none) leaves one edge out.
UnionFind vertex_classes(const Hypergraph& h, int skip_edge) {
    UnionFind uf(h.vertex_count());
    for (int e = 0; e < h.edge_count(); ++e) {
        if (e == skip_edge)
            continue;
        const auto& mem = h.members(e);
        for (std::size_t i = 1; i < mem.size(); ++i)
            uf.join(mem[0], mem[i]);
    }
    return uf;
}

int omega_without_edge(const Hypergraph& h, int skip_edge) {
    UnionFind uf = vertex_classes(h, skip_edge);
    int count = 0;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (uf.find(v) == v)
            ++count;
    return count;
}

} // namespace

ComponentPartition components(const Hypergraph& h) {
    UnionFind uf = vertex_classes(h, -1);
    std::map<std::string, std::vector<std::string>> by_min; // min member -> class
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < h.vertex_count(); ++v)
        groups[uf.find(v)].push_back(v);

    ComponentPartition part;
    for (auto& [root, vs] : groups) {
        std::vector<std::string> names;
        for (int v : vs)
            names.push_back(h.vertex_names()[v]);
        std::sort(names.begin(), names.end());
        by_min[names.front()] = std::move(names);
    }
    std::map<int, int> class_of_root;
    for (auto& [min_name, names] : by_min) {
        int idx = static_cast<int>(part.classes.size());
        class_of_root[uf.find(h.vertex_index(min_name))] = idx;
        part.classes.push_back(names);
    }
    for (int e = 0; e < h.edge_count(); ++e) {
        const auto& mem = h.members(e);
        if (mem.empty())
            part.stray_empty_edges.push_back(h.edge_names()[e]);
        else
            part.edge_assignment[h.edge_names()[e]] = class_of_root[uf.find(mem[0])];
    }
    std::sort(part.stray_empty_edges.begin(), part.stray_empty_edges.end());
    return part;
}

int omega(const Hypergraph& h) {
    return omega_without_edge(h, -1);
}

bool is_connected(const Hypergraph& h) {
    return omega(h) == 1;
}

const char* cut_edge_kind_name(CutEdgeKind k) {
    switch (k) {
    case CutEdgeKind::NotCut: return "NotCut";
    case CutEdgeKind::Weak: return "Weak";
    case CutEdgeKind::Strong: return "Strong";
    }
    return "?";
}

CutEdgeKind classify_cut_edge(const Hypergraph& h, const std::string& edge) {
    int e = h.edge_index(edge);
    int before = omega(h);
    int after = omega_without_edge(h, e);
    if (after <= before)
        return CutEdgeKind::NotCut;
    int card = h.edge_cardinality_at(e);
    if (after > before + card - 1)
        throw std::logic_error("cut edge exceeds the component ceiling"); // cannot happen
    return after == before + card - 1 ? CutEdgeKind::Strong : CutEdgeKind::Weak;
}

std::vector<std::pair<std::string, CutEdgeKind>> cut_edges(const Hypergraph& h) {
    std::vector<std::pair<std::string, CutEdgeKind>> out;
    for (const auto& e : h.edge_names()) {
        CutEdgeKind k = classify_cut_edge(h, e);
        if (k != CutEdgeKind::NotCut)
            out.emplace_back(e, k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool singleton_edge_at(const Hypergraph& h, int v) {
    for (int e : h.incident(v))
        if (h.edge_cardinality_at(e) == 1)
            return true;
    return false;
}

bool cut_vertex_direct(const Hypergraph& h, const std::string& v) {
    return omega(delete_vertex(h, v)) > omega(h);
}

} // namespace

bool is_cut_vertex(const Hypergraph& h, const std::string& v) {
    int vi = h.vertex_index(v);
    if (h.vertex_count() < 2)
        raise(Errc::LastVertex, "cut vertices need at least two vertices");
    if (singleton_edge_at(h, vi))
        return cut_vertex_direct(h, v); // the articulation shortcut is invalid here
    auto cuts = graph_cut_vertices(BipartiteIncidenceGraph::of(h));
    return std::binary_search(cuts.begin(), cuts.end(), vi);
}

std::vector<std::string> cut_vertices(const Hypergraph& h) {
    if (h.vertex_count() < 2)
        raise(Errc::LastVertex, "cut vertices need at least two vertices");
    auto cuts = graph_cut_vertices(BipartiteIncidenceGraph::of(h));
    std::vector<std::string> out;
    for (int v = 0; v < h.vertex_count(); ++v) {
        bool cut = singleton_edge_at(h, v)
                       ? cut_vertex_direct(h, h.vertex_names()[v])
                       : std::binary_search(cuts.begin(), cuts.end(), v);
        if (cut)
            out.push_back(h.vertex_names()[v]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_separating_vertex(const Hypergraph& h, const std::string& v) {
    int vi = h.vertex_index(v);
    if (h.has_empty_edges())
        raise(Errc::HasEmptyEdges, "separating vertices are defined without empty edges");
    if (!is_connected(h))
        raise(Errc::NotConnected, "separating vertices are defined on connected input");
    auto cuts = graph_cut_vertices(BipartiteIncidenceGraph::of(h));
    return std::binary_search(cuts.begin(), cuts.end(), vi);
}

std::vector<std::string> separating_vertices(const Hypergraph& h) {
    if (h.has_empty_edges())
        raise(Errc::HasEmptyEdges, "separating vertices are defined without empty edges");
    if (!is_connected(h))
        raise(Errc::NotConnected, "separating vertices are defined on connected input");
    auto cuts = graph_cut_vertices(BipartiteIncidenceGraph::of(h));
    std::vector<std::string> out;
    for (int x : cuts)
        if (x < h.vertex_count())
            out.push_back(h.vertex_names()[x]);
    std::sort(out.begin(), out.end());
    return out;
}

bool cut_vertex_bound_check(const Hypergraph& h, const std::string& v) {
    int vi = h.vertex_index(v);
    if (h.vertex_count() < 2 || h.edge_count() < 1 || h.has_empty_edges() ||
        h.has_isolated_vertices() || singleton_edge_at(h, vi) || !is_cut_vertex(h, v))
        raise(Errc::PreconditionUnmet,
              "bound needs a cut vertex v with {v} not an edge, no empty edges, "
              "no isolated vertices");
    return omega(delete_vertex(h, v)) <= omega(h) + h.degree_at(vi) - 1;
}

} // namespace hyperconn
