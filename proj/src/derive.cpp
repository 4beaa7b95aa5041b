#include "hyperconn/derive.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace hyperconn {

namespace {

std::set<std::string> name_set(const std::vector<std::string>& names) {
    return {names.begin(), names.end()};
}

std::vector<std::string> sorted_member_names(const Hypergraph& h, int e) {
    std::vector<std::string> out;
    for (int v : h.members(e))
        out.push_back(h.vertex_names()[v]);
    return out; // member indices ascend with insertion order, not id order
}

} // namespace

bool witness_law_holds(const Hypergraph& parent, const SubhypergraphWitness& w) {
    std::set<std::string> child_vertices = name_set(w.child.vertex_names());
    std::map<std::string, std::string> origin(w.edge_origin.begin(), w.edge_origin.end());
    if (origin.size() != w.edge_origin.size())
        return false;
    std::set<std::string> used_parents;
    for (const auto& child_edge : w.child.edge_names()) {
        auto it = origin.find(child_edge);
        if (it == origin.end() || !parent.has_edge(it->second))
            return false;
        if (!used_parents.insert(it->second).second)
            return false; // origin must be injective
        std::set<std::string> expected;
        for (const auto& v : parent.member_names(it->second))
            if (child_vertices.count(v))
                expected.insert(v);
        auto got = w.child.member_names(child_edge);
        if (std::set<std::string>(got.begin(), got.end()) != expected)
            return false;
    }
    return origin.size() == w.child.edge_names().size();
}

Hypergraph delete_edge(const Hypergraph& h, const std::string& edge) {
    return delete_edges(h, {edge});
}

Hypergraph delete_edges(const Hypergraph& h, const std::vector<std::string>& edges) {
    std::set<int> drop;
    for (const auto& e : edges)
        drop.insert(h.edge_index(e));
    std::vector<Hypergraph::EdgeSpec> kept;
    for (int e = 0; e < h.edge_count(); ++e)
        if (!drop.count(e))
            kept.emplace_back(h.edge_names()[e], sorted_member_names(h, e));
    return Hypergraph::build(h.vertex_names(), kept);
}

Hypergraph delete_vertex(const Hypergraph& h, const std::string& vertex) {
    int v = h.vertex_index(vertex);
    if (h.vertex_count() < 2)
        raise(Errc::LastVertex, "cannot delete the only vertex");
    std::vector<std::string> vertices;
    for (int i = 0; i < h.vertex_count(); ++i)
        if (i != v)
            vertices.push_back(h.vertex_names()[i]);
    std::vector<Hypergraph::EdgeSpec> edges;
    for (int e = 0; e < h.edge_count(); ++e) {
        std::vector<std::string> mem;
        for (int w : h.members(e))
            if (w != v)
                mem.push_back(h.vertex_names()[w]);
        if (!mem.empty())
            edges.emplace_back(h.edge_names()[e], std::move(mem));
    }
    return Hypergraph::build(vertices, edges);
}

Hypergraph strong_delete_vertex(const Hypergraph& h, const std::string& vertex) {
    int v = h.vertex_index(vertex);
    if (h.vertex_count() < 2)
        raise(Errc::LastVertex, "cannot delete the only vertex");
    std::vector<std::string> vertices;
    for (int i = 0; i < h.vertex_count(); ++i)
        if (i != v)
            vertices.push_back(h.vertex_names()[i]);
    std::vector<Hypergraph::EdgeSpec> edges;
    for (int e = 0; e < h.edge_count(); ++e) {
        const auto& mem = h.members(e);
        if (std::binary_search(mem.begin(), mem.end(), v))
            continue;
        edges.emplace_back(h.edge_names()[e], sorted_member_names(h, e));
    }
    return Hypergraph::build(vertices, edges);
}

Hypergraph strong_delete_edge(const Hypergraph& h, const std::string& edge) {
    int e = h.edge_index(edge);
    std::set<int> gone(h.members(e).begin(), h.members(e).end());
    std::vector<std::string> vertices;
    for (int i = 0; i < h.vertex_count(); ++i)
        if (!gone.count(i))
            vertices.push_back(h.vertex_names()[i]);
    if (vertices.empty())
        raise(Errc::ResultHasNoVertices, "edge '" + edge + "' covers every vertex");
    std::vector<Hypergraph::EdgeSpec> edges;
    for (int f = 0; f < h.edge_count(); ++f) {
        if (f == e)
            continue;
        std::vector<std::string> mem;
        for (int w : h.members(f))
            if (!gone.count(w))
                mem.push_back(h.vertex_names()[w]);
        edges.emplace_back(h.edge_names()[f], std::move(mem));
    }
    return Hypergraph::build(vertices, edges);
}

SubhypergraphWitness induced_subhypergraph(const Hypergraph& h,
                                           const std::vector<std::string>& vertices) {
    if (vertices.empty())
        raise(Errc::EmptySelection, "vertex selection is empty");
    std::set<int> keep;
    for (const auto& v : vertices)
        keep.insert(h.vertex_index(v));
    std::vector<std::string> child_vertices;
    for (int i = 0; i < h.vertex_count(); ++i)
        if (keep.count(i))
            child_vertices.push_back(h.vertex_names()[i]);
    std::vector<Hypergraph::EdgeSpec> edges;
    std::vector<std::pair<std::string, std::string>> origin;
    for (int e = 0; e < h.edge_count(); ++e) {
        std::vector<std::string> mem;
        for (int w : h.members(e))
            if (keep.count(w))
                mem.push_back(h.vertex_names()[w]);
        if (!mem.empty()) {
            edges.emplace_back(h.edge_names()[e], std::move(mem));
            origin.emplace_back(h.edge_names()[e], h.edge_names()[e]);
        }
    }
    std::sort(origin.begin(), origin.end());
    return SubhypergraphWitness{Hypergraph::build(child_vertices, edges), std::move(origin)};
}

Hypergraph induced_hypersubgraph_vertices(const Hypergraph& h,
                                          const std::vector<std::string>& vertices) {
    if (vertices.empty())
        raise(Errc::EmptySelection, "vertex selection is empty");
    std::set<int> keep;
    for (const auto& v : vertices)
        keep.insert(h.vertex_index(v));
    std::vector<std::string> child_vertices;
    for (int i = 0; i < h.vertex_count(); ++i)
        if (keep.count(i))
            child_vertices.push_back(h.vertex_names()[i]);
    std::vector<Hypergraph::EdgeSpec> edges;
    for (int e = 0; e < h.edge_count(); ++e) {
        const auto& mem = h.members(e);
        if (mem.empty())
            continue;
        bool inside = std::all_of(mem.begin(), mem.end(), [&](int w) { return keep.count(w) != 0; });
        if (inside)
            edges.emplace_back(h.edge_names()[e], sorted_member_names(h, e));
    }
    return Hypergraph::build(child_vertices, edges);
}

Hypergraph induced_hypersubgraph_edges(const Hypergraph& h,
                                       const std::vector<std::string>& edges) {
    std::set<int> keep;
    for (const auto& e : edges)
        keep.insert(h.edge_index(e));
    std::set<int> vs;
    for (int e : keep)
        vs.insert(h.members(e).begin(), h.members(e).end());
    if (vs.empty())
        raise(Errc::ResultHasNoVertices, "selected edges cover no vertex");
    std::vector<std::string> vertices;
    for (int i = 0; i < h.vertex_count(); ++i)
        if (vs.count(i))
            vertices.push_back(h.vertex_names()[i]);
    std::vector<Hypergraph::EdgeSpec> specs;
    for (int e = 0; e < h.edge_count(); ++e)
        if (keep.count(e))
            specs.emplace_back(h.edge_names()[e], sorted_member_names(h, e));
    return Hypergraph::build(vertices, specs);
}

Hypergraph trace(const Hypergraph& h, const std::vector<std::string>& vertices) {
    if (vertices.empty())
        raise(Errc::EmptySelection, "vertex selection is empty");
    std::set<int> sel;
    for (const auto& v : vertices)
        sel.insert(h.vertex_index(v));
    std::vector<std::string> chosen;
    for (int e = 0; e < h.edge_count(); ++e) {
        const auto& mem = h.members(e);
        if (std::all_of(mem.begin(), mem.end(), [&](int w) { return sel.count(w) != 0; }))
            chosen.push_back(h.edge_names()[e]);
    }
    return induced_hypersubgraph_edges(h, chosen); // may fail: only empty edges chosen
}

Hypergraph hypergraph_union(const Hypergraph& a, const Hypergraph& b) {
    std::map<std::string, std::vector<std::string>> subsets;
    std::vector<std::string> edge_order;
    for (const auto& e : a.edge_names()) {
        subsets[e] = a.member_names(e);
        edge_order.push_back(e);
    }
    for (const auto& e : b.edge_names()) {
        auto mem = b.member_names(e);
        auto it = subsets.find(e);
        if (it == subsets.end()) {
            subsets[e] = mem;
            edge_order.push_back(e);
        } else if (it->second != mem) {
            raise(Errc::IncidenceDisagreement,
                  "edge '" + e + "' has different subsets in the two operands");
        }
    }
    std::vector<std::string> vertices = a.vertex_names();
    std::set<std::string> seen(vertices.begin(), vertices.end());
    for (const auto& v : b.vertex_names())
        if (seen.insert(v).second)
            vertices.push_back(v);
    std::vector<Hypergraph::EdgeSpec> edges;
    for (const auto& e : edge_order)
        edges.emplace_back(e, subsets[e]);
    return Hypergraph::build(vertices, edges);
}

Hypergraph hypergraph_intersection(const Hypergraph& a, const Hypergraph& b) {
    std::vector<Hypergraph::EdgeSpec> edges;
    for (const auto& e : a.edge_names()) {
        if (!b.has_edge(e))
            continue;
        auto ma = a.member_names(e);
        auto mb = b.member_names(e);
        if (ma != mb)
            raise(Errc::IncidenceDisagreement,
                  "edge '" + e + "' has different subsets in the two operands");
        edges.emplace_back(e, ma);
    }
    std::set<std::string> bv = name_set(b.vertex_names());
    std::vector<std::string> vertices;
    for (const auto& v : a.vertex_names())
        if (bv.count(v))
            vertices.push_back(v);
    if (vertices.empty())
        raise(Errc::ResultHasNoVertices, "operands share no vertex");
    return Hypergraph::build(vertices, edges);
}

bool decompose_check(const Hypergraph& whole, const Hypergraph& part1, const Hypergraph& part2) {
    std::set<std::string> e1 = name_set(part1.edge_names());
    for (const auto& e : part2.edge_names())
        if (e1.count(e))
            return false;
    try {
        return hypergraph_union(part1, part2) == whole;
    } catch (const HgError&) {
        return false;
    }
}

Hypergraph dual(const Hypergraph& h) {
    if (h.is_empty())
        raise(Errc::EmptyEdgeCollection, "the dual needs at least one edge");
    std::vector<Hypergraph::EdgeSpec> edges;
    for (int v = 0; v < h.vertex_count(); ++v) {
        std::vector<std::string> mem;
        for (int e : h.incident(v))
            mem.push_back(h.edge_names()[e]);
        edges.emplace_back(h.vertex_names()[v], std::move(mem));
    }
    return Hypergraph::build(h.edge_names(), edges);
}

bool is_hypersubgraph(const Hypergraph& parent, const Hypergraph& child) {
    for (const auto& v : child.vertex_names())
        if (!parent.has_vertex(v))
            return false;
    for (const auto& e : child.edge_names()) {
        if (!parent.has_edge(e))
            return false;
        if (child.member_names(e) != parent.member_names(e))
            return false;
    }
    return true;
}

std::optional<SubhypergraphWitness> find_subhypergraph_witness(const Hypergraph& parent,
                                                               const Hypergraph& child) {
    for (const auto& v : child.vertex_names())
        if (!parent.has_vertex(v))
            return std::nullopt;
    std::set<std::string> cv = name_set(child.vertex_names());

    // Restrict each parent edge to the child's vertices up front.
    std::vector<std::vector<std::string>> restricted(parent.edge_count());
    for (int e = 0; e < parent.edge_count(); ++e) {
        for (int w : parent.members(e))
            if (cv.count(parent.vertex_names()[w]))
                restricted[e].push_back(parent.vertex_names()[w]);
        std::sort(restricted[e].begin(), restricted[e].end());
    }

    const int m = child.edge_count();
    std::vector<std::vector<std::string>> target(m);
    for (int e = 0; e < m; ++e)
        target[e] = child.member_names(child.edge_names()[e]);

    // Backtracking over injective assignments child edge -> parent edge.
    std::vector<int> assign(m, -1);
    std::vector<char> used(parent.edge_count(), 0);
    std::function<bool(int)> go = [&](int i) {
        if (i == m)
            return true;
        for (int e = 0; e < parent.edge_count(); ++e) {
            if (used[e] || restricted[e] != target[i])
                continue;
            used[e] = 1;
            assign[i] = e;
            if (go(i + 1))
                return true;
            used[e] = 0;
        }
        return false;
    };
    if (!go(0))
        return std::nullopt;

    std::vector<std::pair<std::string, std::string>> origin;
    for (int i = 0; i < m; ++i)
        origin.emplace_back(child.edge_names()[i], parent.edge_names()[assign[i]]);
    std::sort(origin.begin(), origin.end());
    return SubhypergraphWitness{child, std::move(origin)};
}

bool is_r_factor(const Hypergraph& host, const Hypergraph& candidate, int r) {
    if (candidate.vertex_count() != host.vertex_count())
        return false;
    for (const auto& v : host.vertex_names())
        if (!candidate.has_vertex(v))
            return false;
    return is_hypersubgraph(host, candidate) && candidate.is_regular(r);
}

} // namespace hyperconn
