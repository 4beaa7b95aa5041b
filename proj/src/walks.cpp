#include "hyperconn/walks.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace hyperconn {

WalkSeq WalkSeq::parse(const std::string& text) {
    WalkSeq w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok)
        w.tokens.push_back(tok);
    return w;
}

std::string WalkSeq::text() const {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i)
            out += ' ';
        out += tokens[i];
    }
    return out;
}

const char* closed_kind_name(ClosedKind k) {
    switch (k) {
    case ClosedKind::None: return "not a walk";
    case ClosedKind::Open: return "open";
    case ClosedKind::ClosedWalk: return "closed walk";
    case ClosedKind::ClosedTrail: return "closed trail";
    case ClosedKind::ClosedStrictTrail: return "closed strict trail";
    case ClosedKind::PseudoCycle: return "pseudo cycle";
    case ClosedKind::Cycle: return "cycle";
    }
    return "?";
}

std::string WalkClass::summary() const {
    if (!is_walk)
        return "not a walk";
    if (is_closed())
        return closed_kind_name(closed);
    if (is_path)
        return "path";
    if (is_pseudo_path)
        return "pseudo path";
    if (is_strict_trail)
        return "strict trail";
    if (is_trail)
        return "trail";
    return "walk";
}

namespace {

struct ResolvedWalk {
    std::vector<int> vertices; // k+1
    std::vector<int> edges;    // k
};

// Checks alternation and token existence; throws for malformed input.
ResolvedWalk resolve(const Hypergraph& h, const WalkSeq& w) {
    if (w.tokens.empty() || w.tokens.size() % 2 == 0)
        raise(Errc::MalformedAlternation,
              "a walk alternates vertex, edge, ..., vertex (odd token count)");
    ResolvedWalk r;
    for (std::size_t i = 0; i < w.tokens.size(); ++i) {
        const std::string& t = w.tokens[i];
        if (i % 2 == 0) {
            if (!h.has_vertex(t))
                raise(Errc::UnknownToken, "'" + t + "' is not a vertex");
            r.vertices.push_back(h.vertex_index(t));
        } else {
            if (!h.has_edge(t))
                raise(Errc::UnknownToken, "'" + t + "' is not an edge");
            r.edges.push_back(h.edge_index(t));
        }
    }
    return r;
}

bool steps_valid(const Hypergraph& h, const ResolvedWalk& r) {
    for (std::size_t i = 0; i < r.edges.size(); ++i) {
        int a = r.vertices[i], b = r.vertices[i + 1], e = r.edges[i];
        if (a == b)
            return false; // adjacent vertices are distinct by definition
        const auto& mem = h.members(e);
        if (!std::binary_search(mem.begin(), mem.end(), a) ||
            !std::binary_search(mem.begin(), mem.end(), b))
            return false;
    }
    return true;
}

template <typename T> bool all_distinct(std::vector<T> xs) {
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

// The 2k anchor flags (v0,e1),(v1,e1),(v1,e2),...,(v_{k-1},ek),(vk,ek).
std::vector<std::pair<int, int>> anchor_flags(const ResolvedWalk& r) {
    std::vector<std::pair<int, int>> flags;
    for (std::size_t i = 0; i < r.edges.size(); ++i) {
        flags.emplace_back(r.vertices[i], r.edges[i]);
        flags.emplace_back(r.vertices[i + 1], r.edges[i]);
    }
    return flags;
}

} // namespace

WalkClass classify(const Hypergraph& h, const WalkSeq& w) {
    ResolvedWalk r = resolve(h, w);
    WalkClass c;
    if (!steps_valid(h, r))
        return c;
    c.is_walk = true;

    const int k = static_cast<int>(r.edges.size());
    const bool closed = k >= 2 && r.vertices.front() == r.vertices.back();
    c.is_trail = all_distinct(anchor_flags(r));
    c.is_strict_trail = all_distinct(r.edges);

    if (!closed) {
        c.closed = ClosedKind::Open;
        const bool vdistinct = all_distinct(r.vertices);
        c.is_pseudo_path = c.is_trail && vdistinct;
        c.is_path = vdistinct && c.is_strict_trail;
        return c;
    }

    std::vector<int> round(r.vertices.begin(), r.vertices.end() - 1); // v0..v_{k-1}
    const bool round_distinct = all_distinct(round);
    if (round_distinct && c.is_strict_trail)
        c.closed = ClosedKind::Cycle;
    else if (round_distinct && c.is_trail)
        c.closed = ClosedKind::PseudoCycle;
    else if (c.is_strict_trail)
        c.closed = ClosedKind::ClosedStrictTrail;
    else if (c.is_trail)
        c.closed = ClosedKind::ClosedTrail;
    else
        c.closed = ClosedKind::ClosedWalk;
    return c;
}

WalkAnatomy anatomy(const Hypergraph& h, const WalkSeq& w) {
    if (!classify(h, w).is_walk)
        raise(Errc::NotAWalk, "'" + w.text() + "' is not a walk");
    ResolvedWalk r = resolve(h, w);
    std::set<int> anchors(r.vertices.begin(), r.vertices.end());
    std::set<int> inside;
    for (int e : r.edges)
        inside.insert(h.members(e).begin(), h.members(e).end());
    WalkAnatomy a;
    for (int v : anchors)
        a.anchors.push_back(h.vertex_names()[v]);
    for (int v : inside)
        if (!anchors.count(v))
            a.floaters.push_back(h.vertex_names()[v]);
    for (int e : r.edges)
        a.edge_ids.push_back(h.edge_names()[e]);
    std::sort(a.anchors.begin(), a.anchors.end());
    std::sort(a.floaters.begin(), a.floaters.end());
    std::sort(a.edge_ids.begin(), a.edge_ids.end());
    return a;
}

Hypergraph associated_hypersubgraph(const Hypergraph& h, const WalkSeq& w) {
    if (!classify(h, w).is_walk)
        raise(Errc::NotAWalk, "'" + w.text() + "' is not a walk");
    ResolvedWalk r = resolve(h, w);
    std::set<int> eset(r.edges.begin(), r.edges.end());
    std::set<int> vset(r.vertices.begin(), r.vertices.end());
    for (int e : eset)
        vset.insert(h.members(e).begin(), h.members(e).end());
    std::vector<std::string> vertices;
    for (int v : vset)
        vertices.push_back(h.vertex_names()[v]);
    std::vector<Hypergraph::EdgeSpec> edges;
    for (int e = 0; e < h.edge_count(); ++e) {
        if (!eset.count(e))
            continue;
        std::vector<std::string> mem;
        for (int v : h.members(e))
            mem.push_back(h.vertex_names()[v]);
        edges.emplace_back(h.edge_names()[e], std::move(mem));
    }
    return Hypergraph::build(vertices, edges);
}

SubhypergraphWitness associated_subhypergraph(const Hypergraph& h, const WalkSeq& w) {
    Hypergraph full = associated_hypersubgraph(h, w);
    ResolvedWalk r = resolve(h, w);
    std::set<std::string> anchors;
    for (int v : r.vertices)
        anchors.insert(h.vertex_names()[v]);
    return induced_subhypergraph(full, {anchors.begin(), anchors.end()});
}

WalkSeq concatenate(const WalkSeq& a, const WalkSeq& b) {
    if (a.tokens.empty() || b.tokens.empty() || a.tokens.back() != b.tokens.front())
        raise(Errc::EndpointMismatch, "walks do not share the junction vertex");
    WalkSeq out = a;
    out.tokens.insert(out.tokens.end(), b.tokens.begin() + 1, b.tokens.end());
    return out;
}

std::vector<int> to_incidence_walk(const BipartiteIncidenceGraph& g, const WalkSeq& w) {
    if (w.tokens.empty() || w.tokens.size() % 2 == 0)
        raise(Errc::MalformedAlternation,
              "a walk alternates vertex, edge, ..., vertex (odd token count)");
    std::vector<int> nodes;
    for (std::size_t i = 0; i < w.tokens.size(); ++i)
        nodes.push_back(i % 2 == 0 ? g.v_node(w.tokens[i]) : g.e_node(w.tokens[i]));
    return nodes;
}

GraphWalkClass classify_incidence(const BipartiteIncidenceGraph& g, const std::vector<int>& nodes) {
    GraphWalkClass c;
    if (nodes.empty())
        return c;
    c.is_walk = true;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        if (!g.adjacent(nodes[i], nodes[i + 1]))
            c.is_walk = false;

    c.no_equal_consecutive_v = true;
    for (std::size_t i = 0; i + 2 < nodes.size(); i += 2)
        if (nodes[i] == nodes[i + 2] && g.is_v_node(nodes[i]))
            c.no_equal_consecutive_v = false;

    if (!c.is_walk)
        return c;

    const std::size_t steps = nodes.size() - 1;
    c.is_closed = steps >= 2 && nodes.front() == nodes.back();

    std::vector<std::pair<int, int>> graph_edges;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        int a = nodes[i], b = nodes[i + 1];
        if (b < a)
            std::swap(a, b);
        graph_edges.emplace_back(a, b);
    }
    std::sort(graph_edges.begin(), graph_edges.end());
    c.is_trail = std::adjacent_find(graph_edges.begin(), graph_edges.end()) == graph_edges.end();

    std::vector<int> all(nodes);
    std::sort(all.begin(), all.end());
    c.is_path = std::adjacent_find(all.begin(), all.end()) == all.end();

    std::map<int, int> count_open, count_closed;
    for (int x : nodes)
        ++count_open[x];
    count_closed = count_open;
    if (c.is_closed)
        --count_closed[nodes.front()]; // first and last are one visit

    c.each_e_at_most_once = true;
    c.each_v_at_most_once_open = true;
    c.each_v_at_most_once_closed = true;
    for (auto [x, n] : count_open) {
        if (g.is_e_node(x) && n > 1)
            c.each_e_at_most_once = false;
        if (g.is_v_node(x) && n > 1)
            c.each_v_at_most_once_open = false;
    }
    for (auto [x, n] : count_closed)
        if (g.is_v_node(x) && n > 1)
            c.each_v_at_most_once_closed = false;

    if (c.is_closed && c.is_trail && steps >= 3) {
        std::vector<int> internal(nodes.begin() + 1, nodes.end() - 1);
        std::sort(internal.begin(), internal.end());
        bool internal_distinct =
            std::adjacent_find(internal.begin(), internal.end()) == internal.end();
        bool ends_inside = std::binary_search(internal.begin(), internal.end(), nodes.front());
        c.is_cycle = internal_distinct && !ends_inside;
    }
    return c;
}

WalkSeq dual_closed_walk(const Hypergraph& h, const WalkSeq& w) {
    WalkClass c = classify(h, w);
    if (!c.is_walk)
        raise(Errc::NotAWalk, "'" + w.text() + "' is not a walk");
    if (!c.is_closed())
        raise(Errc::NotClosed, "the dual rewrite needs a closed walk");
    const int k = w.length();
    for (int i = 1; i <= k; ++i) {
        const std::string& e = w.edge_at(i);
        const std::string& next = w.edge_at(i == k ? 1 : i + 1);
        if (e == next)
            raise(Errc::ConsecutiveEdgeRepeat,
                  "edge '" + e + "' repeats consecutively around the walk");
    }
    // v0 e1 v1 e2 ... vk-1 ek v0  becomes  e1 v1 e2 v2 ... ek v0 e1.
    WalkSeq out;
    for (int i = 1; i <= k; ++i) {
        out.tokens.push_back(w.edge_at(i));
        out.tokens.push_back(w.vertex_at(i == k ? 0 : i));
    }
    out.tokens.push_back(w.edge_at(1));
    return out;
}

std::optional<WalkSeq> find_path(const Hypergraph& h, const std::string& u, const std::string& v) {
    int su = h.vertex_index(u), sv = h.vertex_index(v);
    if (su == sv)
        return WalkSeq{{u}};
    BipartiteIncidenceGraph g = BipartiteIncidenceGraph::of(h);
    std::vector<int> parent(g.node_count(), -2);
    std::deque<int> queue{su};
    parent[su] = -1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == sv)
            break;
        for (int y : g.neighbors(x))
            if (parent[y] == -2) {
                parent[y] = x;
                queue.push_back(y);
            }
    }
    if (parent[sv] == -2)
        return std::nullopt;
    std::vector<int> nodes;
    for (int x = sv; x != -1; x = parent[x])
        nodes.push_back(x);
    std::reverse(nodes.begin(), nodes.end());
    WalkSeq out;
    for (int x : nodes)
        out.tokens.push_back(g.node_name(x));
    return out;
}

} // namespace hyperconn
