#include "hyperconn/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "hyperconn/blocks.hpp"
#include "hyperconn/connectivity.hpp"
#include "hyperconn/derive.hpp"
#include "hyperconn/incidence_graph.hpp"
#include "hyperconn/textio.hpp"

namespace hyperconn {

namespace {

long long ipow(long long base, int exp) {
    long long r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

} // namespace

long long EnumSpace::size() const {
    long long total = 0;
    for (int n = 1; n <= max_vertices; ++n) {
        long long base = allow_empty_edges ? (1LL << n) : ((1LL << n) - 1);
        for (int m = 0; m <= max_edges; ++m)
            total += ipow(base, m);
    }
    return total;
}

Hypergraph EnumSpace::instance_at(long long ordinal) const {
    for (int n = 1; n <= max_vertices; ++n) {
        long long base = allow_empty_edges ? (1LL << n) : ((1LL << n) - 1);
        for (int m = 0; m <= max_edges; ++m) {
            long long block = ipow(base, m);
            if (ordinal >= block) {
                ordinal -= block;
                continue;
            }
            std::vector<long long> code(m);
            for (int j = m - 1; j >= 0; --j) {
                code[j] = ordinal % base;
                ordinal /= base;
            }
            std::vector<std::string> vertices;
            for (int i = 1; i <= n; ++i)
                vertices.push_back("v" + std::to_string(i));
            std::vector<Hypergraph::EdgeSpec> edges;
            for (int j = 0; j < m; ++j) {
                long long bits = allow_empty_edges ? code[j] : code[j] + 1;
                std::vector<std::string> mem;
                for (int i = 0; i < n; ++i)
                    if (bits & (1LL << i))
                        mem.push_back(vertices[i]);
                edges.emplace_back("e" + std::to_string(j + 1), std::move(mem));
            }
            return Hypergraph::build(vertices, edges);
        }
    }
    raise(Errc::PreconditionUnmet, "ordinal past the end of the enumeration space");
}

void enumerate(const EnumSpace& space, const std::function<void(const Hypergraph&)>& fn) {
    const long long total = space.size();
    for (long long i = 0; i < total; ++i)
        fn(space.instance_at(i));
}

// --- closed-walk enumeration --------------------------------------------------

namespace {

// Lexicographically smallest of the 2k rotations/reflections of a closed
// token sequence v0 e1 v1 ... ek v0.
std::vector<std::string> canonical_closed(const std::vector<std::string>& toks) {
    const int k = static_cast<int>(toks.size()) / 2;
    std::vector<std::string> vs(k), es(k); // es[i] joins vs[i] to vs[(i+1)%k]
    for (int i = 0; i < k; ++i) {
        vs[i] = toks[2 * std::size_t(i)];
        es[i] = toks[2 * std::size_t(i) + 1];
    }
    std::vector<std::string> best;
    std::vector<std::string> cand;
    for (int r = 0; r < k; ++r) {
        cand.clear();
        for (int i = 0; i < k; ++i) {
            cand.push_back(vs[(r + i) % k]);
            cand.push_back(es[(r + i) % k]);
        }
        cand.push_back(vs[r]);
        if (best.empty() || cand < best)
            best = cand;
        cand.clear();
        for (int i = 0; i < k; ++i) {
            cand.push_back(vs[(r - i + k) % k]);
            cand.push_back(es[(r - i - 1 + 2 * k) % k]);
        }
        cand.push_back(vs[r]);
        if (cand < best)
            best = cand;
    }
    return best;
}

std::vector<std::string> walk_tokens(const Hypergraph& h, const std::vector<int>& vs,
                                     const std::vector<int>& es) {
    std::vector<std::string> toks;
    toks.push_back(h.vertex_names()[vs[0]]);
    for (std::size_t i = 0; i < es.size(); ++i) {
        toks.push_back(h.edge_names()[es[i]]);
        toks.push_back(h.vertex_names()[vs[i + 1]]);
    }
    return toks;
}

// Depth-first enumeration of closed walks from every start vertex. With
// distinct_vertices the round vertices stay pairwise distinct (as in cycles
// and pseudo cycles); without it the walk may revisit anything, including the
// start mid-walk (figure-eight strict trails need that). distinct_edges
// forbids reusing an edge id.
void closed_walks(const Hypergraph& h, int max_len, bool distinct_vertices, bool distinct_edges,
                  const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
    const int n = h.vertex_count();
    if (max_len < 2)
        return;
    std::vector<char> used_v(n, 0), used_e(h.edge_count(), 0);
    std::vector<int> vs, es;
    std::function<void(int, int)> go = [&](int start, int cur) {
        const int next_len = static_cast<int>(es.size()) + 1;
        for (int e : h.incident(cur)) {
            if (distinct_edges && used_e[e])
                continue;
            for (int w : h.members(e)) {
                if (w == cur)
                    continue;
                if (w == start && next_len >= 2) {
                    es.push_back(e);
                    vs.push_back(w);
                    fn(vs, es);
                    es.pop_back();
                    vs.pop_back();
                }
                if (next_len >= max_len)
                    continue;
                if (distinct_vertices && used_v[w])
                    continue; // covers the start vertex too
                if (distinct_vertices)
                    used_v[w] = 1;
                if (distinct_edges)
                    used_e[e] = 1;
                es.push_back(e);
                vs.push_back(w);
                go(start, w);
                vs.pop_back();
                es.pop_back();
                if (distinct_edges)
                    used_e[e] = 0;
                if (distinct_vertices)
                    used_v[w] = 0;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        if (distinct_vertices)
            used_v[s] = 1;
        vs.assign(1, s);
        es.clear();
        go(s, s);
        used_v[s] = 0;
    }
}

} // namespace

std::vector<WalkSeq> enumerate_cycles(const Hypergraph& h, int max_len) {
    if (max_len != 0 && max_len < 2)
        raise(Errc::PreconditionUnmet, "cycles have length at least 2");
    int cap = std::min(h.vertex_count(), h.edge_count());
    if (max_len == 0 || max_len > cap)
        max_len = cap;
    std::set<std::vector<std::string>> canon;
    closed_walks(h, max_len, /*distinct_vertices=*/true, /*distinct_edges=*/true,
                 [&](const std::vector<int>& vs, const std::vector<int>& es) {
                     canon.insert(canonical_closed(walk_tokens(h, vs, es)));
                 });
    std::vector<WalkSeq> out;
    for (const auto& toks : canon)
        out.push_back(WalkSeq{toks});
    return out;
}

bool on_common_cycle(const Hypergraph& h, const std::string& x, const std::string& y) {
    auto resolve = [&](const std::string& t) -> std::pair<bool, std::string> {
        if (h.has_vertex(t))
            return {false, t};
        if (h.has_edge(t))
            return {true, t};
        raise(Errc::UnknownToken, "'" + t + "' names neither a vertex nor an edge");
    };
    auto a = resolve(x), b = resolve(y);
    for (const auto& c : enumerate_cycles(h)) {
        std::set<std::pair<bool, std::string>> elems;
        for (std::size_t i = 0; i + 1 < c.tokens.size(); ++i)
            elems.insert({i % 2 == 1, c.tokens[i]});
        if (elems.count(a) && elems.count(b))
            return true;
    }
    return false;
}

std::vector<WalkSeq> enumerate_closed_trails(const Hypergraph& h, ClosedTrailKind kind,
                                             int max_len) {
    const bool strict = kind == ClosedTrailKind::StrictClosedTrail;
    int cap = strict ? h.edge_count() : h.vertex_count();
    if (max_len == 0 || max_len > cap)
        max_len = cap;
    std::set<std::vector<std::string>> canon;
    closed_walks(h, max_len, /*distinct_vertices=*/!strict, /*distinct_edges=*/strict,
                 [&](const std::vector<int>& vs, const std::vector<int>& es) {
                     WalkSeq w{walk_tokens(h, vs, es)};
                     WalkClass c = classify(h, w);
                     bool keep = strict ? c.is_closed_strict_trail() : c.is_pseudo_cycle();
                     if (keep)
                         canon.insert(canonical_closed(w.tokens));
                 });
    std::vector<WalkSeq> out;
    for (const auto& toks : canon)
        out.push_back(WalkSeq{toks});
    return out;
}

// --- definition-level separating test ----------------------------------------

bool brute_separating(const Hypergraph& h, const std::string& v, int max_edges_guard) {
    const int vi = h.vertex_index(v);
    if (h.has_empty_edges())
        raise(Errc::HasEmptyEdges, "separating vertices are defined without empty edges");
    if (!is_connected(h))
        raise(Errc::NotConnected, "separating vertices are defined on connected input");
    const int m = h.edge_count();
    if (m > max_edges_guard)
        raise(Errc::TooLarge, "refusing to try 2^" + std::to_string(m) + " edge splits");
    const int n = h.vertex_count();

    std::vector<std::uint64_t> edge_mask(m, 0);
    for (int e = 0; e < m; ++e)
        for (int w : h.members(e))
            edge_mask[e] |= 1ULL << w;
    const std::uint64_t vbit = 1ULL << vi;
    const std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;

    // Connectivity of (vertex mask, edge subset) by repeated merging.
    auto part_connected = [&](std::uint64_t vset, std::uint32_t eset) {
        std::vector<int> owner(n, -1);
        int classes = 0;
        for (int i = 0; i < n; ++i)
            if (vset & (1ULL << i))
                owner[i] = classes++;
        auto root = [&](int i) {
            while (owner[i] != i && owner[owner[i]] != owner[i])
                owner[i] = owner[owner[i]];
            return owner[i];
        };
        // owner starts as class number, re-seat to self-indices
        for (int i = 0; i < n; ++i)
            if (vset & (1ULL << i))
                owner[i] = i;
        for (int e = 0; e < m; ++e) {
            if (!(eset & (1U << e)))
                continue;
            int first = -1;
            for (int i = 0; i < n; ++i) {
                if (!(edge_mask[e] & (1ULL << i)))
                    continue;
                if (first == -1)
                    first = root(i);
                else
                    owner[root(i)] = first = root(first);
            }
        }
        std::set<int> roots;
        for (int i = 0; i < n; ++i)
            if (vset & (1ULL << i))
                roots.insert(root(i));
        return roots.size() == 1;
    };

    if (m > 30)
        raise(Errc::TooLarge, "edge split mask would overflow");
    for (std::uint32_t side = 1; side + 1 < (1U << m); ++side) {
        std::uint64_t a = 0, b = 0;
        for (int e = 0; e < m; ++e)
            ((side >> e) & 1U ? a : b) |= edge_mask[e];
        if (!(a & vbit) || !(b & vbit))
            continue; // both parts must contain v
        if ((a & b) != vbit)
            continue; // parts meet only in v
        if ((a | b) != all)
            continue;
        if (part_connected(a, side) && part_connected(b, ~side & ((1U << m) - 1)))
            return true;
    }
    return false;
}

// --- brute-force isomorphism ---------------------------------------------------

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b, int guard_vertices,
                    int guard_edges) {
    if (a.vertex_count() > guard_vertices || b.vertex_count() > guard_vertices ||
        a.edge_count() > guard_edges || b.edge_count() > guard_edges)
        raise(Errc::TooLarge, "instance exceeds the isomorphism guard");
    const int n = a.vertex_count(), m = a.edge_count();
    if (n != b.vertex_count() || m != b.edge_count())
        return false;

    auto degs = [](const Hypergraph& h) {
        std::vector<int> d;
        for (int v = 0; v < h.vertex_count(); ++v)
            d.push_back(h.degree_at(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    auto cards = [](const Hypergraph& h) {
        std::vector<int> c;
        for (int e = 0; e < h.edge_count(); ++e)
            c.push_back(h.edge_cardinality_at(e));
        std::sort(c.begin(), c.end());
        return c;
    };
    if (degs(a) != degs(b) || cards(a) != cards(b))
        return false;

    std::vector<std::vector<int>> b_edges;
    for (int e = 0; e < m; ++e)
        b_edges.push_back(b.members(e));
    std::sort(b_edges.begin(), b_edges.end());

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    do {
        bool degree_ok = true;
        for (int i = 0; i < n && degree_ok; ++i)
            degree_ok = a.degree_at(i) == b.degree_at(perm[i]);
        if (!degree_ok)
            continue;
        std::vector<std::vector<int>> mapped;
        for (int e = 0; e < m; ++e) {
            std::vector<int> mem;
            for (int v : a.members(e))
                mem.push_back(perm[v]);
            std::sort(mem.begin(), mem.end());
            mapped.push_back(std::move(mem));
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == b_edges)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool VerificationReport::ok() const {
    for (const auto& law : laws)
        if (law.failures > 0)
            return false;
    return true;
}

// --- the verification laws -----------------------------------------------------

namespace {

struct LawEnv {
    bool mutate_strong_cut = false;
};

struct LawOutcome {
    bool applicable = false;
    std::string failure; // empty = pass
};

// Collects the first failed expectation of one law on one instance.
struct Check {
    explicit Check(const Hypergraph& instance) : h(instance) {}

    const Hypergraph& h;
    bool applicable = false;
    std::string failure;

    void mark() { applicable = true; }
    bool expect(bool cond, const std::string& what) {
        applicable = true;
        if (!cond && failure.empty())
            failure = what;
        return cond;
    }
    LawOutcome done() const {
        if (!applicable)
            return {};
        if (failure.empty())
            return {true, {}};
        return {true, failure + "\n" + emit_hypergraph(h)};
    }
};

bool vertex_has_singleton_edge(const Hypergraph& h, int v) {
    for (int e : h.incident(v))
        if (h.edge_cardinality_at(e) == 1)
            return true;
    return false;
}

int min_degree(const Hypergraph& h) {
    int d = h.edge_count() + 1;
    for (int v = 0; v < h.vertex_count(); ++v)
        d = std::min(d, h.degree_at(v));
    return d;
}

LawOutcome law_handshake(const Hypergraph& h, const LawEnv&) {
    Check c{h};
    c.mark();
    long long degsum = 0, cardsum = 0;
    int odd_deg = 0, odd_card = 0;
    for (int v = 0; v < h.vertex_count(); ++v) {
        degsum += h.degree_at(v);
        odd_deg += h.degree_at(v) % 2;
    }
    for (int e = 0; e < h.edge_count(); ++e) {
        cardsum += h.edge_cardinality_at(e);
        odd_card += h.edge_cardinality_at(e) % 2;
    }
    const long long fc = static_cast<long long>(h.flag_count());
    c.expect(degsum == fc && cardsum == fc,
             "degree sum, flag count and cardinality sum disagree");
    c.expect(static_cast<long long>(h.flags().size()) == fc, "flag list size disagrees");
    c.expect((odd_deg % 2 == 0) == (odd_card % 2 == 0),
             "odd-degree vs odd-cardinality parity disagrees");
    return c.done();
}

LawOutcome law_matrix_roundtrip(const Hypergraph& h, const LawEnv&) {
    Check c{h};
    c.mark();
    IncidenceMatrix m = h.incidence_matrix();
    Hypergraph h2 = Hypergraph::from_incidence_matrix(m);
    IncidenceMatrix m2 = h2.incidence_matrix();
    c.expect(m2.cells == m.cells, "matrix does not survive the round trip");
    c.expect(h2.vertex_count() == h.vertex_count() && h2.edge_count() == h.edge_count(),
             "round trip changes the dimensions");
    return c.done();
}

LawOutcome law_omega_incidence(const Hypergraph& h, const LawEnv&) {
    if (h.has_empty_edges())
        return {};
    Check c{h};
    c.mark();
    ComponentPartition part = components(h);
    BipartiteIncidenceGraph g = BipartiteIncidenceGraph::of(h);
    auto gcomp = graph_components(g);
    c.expect(part.omega() == static_cast<int>(gcomp.size()),
             "component counts differ between the hypergraph and its incidence graph");

    std::map<std::vector<std::string>, std::vector<std::string>> from_h, from_g;
    for (std::size_t i = 0; i < part.classes.size(); ++i) {
        std::vector<std::string> es;
        for (const auto& [e, cls] : part.edge_assignment)
            if (cls == static_cast<int>(i))
                es.push_back(e);
        std::sort(es.begin(), es.end());
        from_h[part.classes[i]] = std::move(es);
    }
    for (const auto& comp : gcomp) {
        std::vector<std::string> vs, es;
        for (int x : comp)
            (g.is_v_node(x) ? vs : es).push_back(g.node_name(x));
        std::sort(vs.begin(), vs.end());
        std::sort(es.begin(), es.end());
        if (!c.expect(!vs.empty(), "an incidence-graph component has no v-node"))
            return c.done();
        from_g[vs] = std::move(es);
    }
    c.expect(from_h == from_g, "component contents do not correspond one-to-one");
    return c.done();
}

LawOutcome law_cut_incidence(const Hypergraph& h, const LawEnv&) {
    if (h.has_empty_edges())
        return {};
    Check c{h};
    c.mark();
    BipartiteIncidenceGraph g = BipartiteIncidenceGraph::of(h);
    auto cuts = graph_cut_vertices(g);
    auto is_art = [&](int x) { return std::binary_search(cuts.begin(), cuts.end(), x); };
    const int n = h.vertex_count();
    const int before = omega(h);
    for (int e = 0; e < h.edge_count(); ++e) {
        bool def_cut = omega(delete_edge(h, h.edge_names()[e])) > before;
        c.expect(def_cut == is_art(n + e),
                 "edge '" + h.edge_names()[e] + "': cut status differs from the incidence graph");
    }
    if (n >= 2) {
        for (int v = 0; v < n; ++v) {
            if (vertex_has_singleton_edge(h, v))
                continue;
            bool def_cut = omega(delete_vertex(h, h.vertex_names()[v])) > before;
            c.expect(def_cut == is_art(v),
                     "vertex '" + h.vertex_names()[v] +
                         "': cut status differs from the incidence graph");
        }
    }
    return c.done();
}

LawOutcome law_cut_edge_bound(const Hypergraph& h, const LawEnv&) {
    Check c{h};
    c.mark();
    const int before = omega(h);
    for (int e = 0; e < h.edge_count(); ++e) {
        const std::string& name = h.edge_names()[e];
        if (classify_cut_edge(h, name) == CutEdgeKind::NotCut)
            continue;
        int after = omega(delete_edge(h, name));
        c.expect(before < after && after <= before + h.edge_cardinality_at(e) - 1,
                 "cut edge '" + name + "' breaks the component-count bound");
    }
    if (h.vertex_count() >= 2 && h.edge_count() >= 1 && !h.has_empty_edges() &&
        !h.has_isolated_vertices()) {
        for (int v = 0; v < h.vertex_count(); ++v) {
            const std::string& name = h.vertex_names()[v];
            if (vertex_has_singleton_edge(h, v) || !is_cut_vertex(h, name))
                continue;
            c.expect(cut_vertex_bound_check(h, name),
                     "cut vertex '" + name + "' breaks the degree bound");
        }
    }
    return c.done();
}

LawOutcome law_strong_acyclic(const Hypergraph& h, const LawEnv& env) {
    Check c{h};
    c.mark();
    std::set<std::string> on_cycle;
    for (const auto& cyc : enumerate_cycles(h))
        for (std::size_t i = 1; i < cyc.tokens.size(); i += 2)
            on_cycle.insert(cyc.tokens[i]);
    for (int e = 0; e < h.edge_count(); ++e) {
        const std::string& name = h.edge_names()[e];
        CutEdgeKind kind = classify_cut_edge(h, name);
        if (env.mutate_strong_cut && kind != CutEdgeKind::NotCut)
            kind = CutEdgeKind::Strong;
        bool expected_strong = h.edge_cardinality_at(e) >= 2 && !on_cycle.count(name);
        c.expect((kind == CutEdgeKind::Strong) == expected_strong,
                 "edge '" + name + "': strong/weak classification disagrees with the cycle sweep");
    }
    return c.done();
}

LawOutcome law_separating_brute(const Hypergraph& h, const LawEnv&) {
    if (h.has_empty_edges() || !is_connected(h))
        return {};
    Check c{h};
    c.mark();
    for (const auto& v : h.vertex_names())
        c.expect(is_separating_vertex(h, v) == brute_separating(h, v),
                 "vertex '" + v + "': separating status disagrees with the split search");
    return c.done();
}

LawOutcome law_blocks_decomposition(const Hypergraph& h, const LawEnv&) {
    if (h.has_empty_edges())
        return {};
    Check c{h};
    c.mark();
    BlockDecomposition dec = blocks(h);

    std::map<std::string, int> edge_uses;
    std::map<std::string, int> vertex_blocks;
    for (const auto& blk : dec.blocks) {
        c.expect(witness_law_holds(h, blk), "a block's edge-origin witness is broken");
        c.expect(is_nonseparable(blk.child), "a block is separable or disconnected");
        for (const auto& e : blk.child.edge_names())
            ++edge_uses[e];
        for (const auto& v : blk.child.vertex_names())
            ++vertex_blocks[v];
    }
    bool partition = edge_uses.size() == static_cast<std::size_t>(h.edge_count());
    for (const auto& [e, uses] : edge_uses)
        partition = partition && uses == 1 && h.has_edge(e);
    c.expect(partition, "block edges do not partition the edge collection");
    for (const auto& v : h.vertex_names())
        c.expect(vertex_blocks.count(v) == 1, "vertex '" + v + "' lies in no block");

    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < dec.blocks.size(); ++j) {
            const auto& a = dec.blocks[i].child;
            const auto& b = dec.blocks[j].child;
            int shared = 0;
            for (const auto& v : a.vertex_names())
                shared += b.has_vertex(v) ? 1 : 0;
            c.expect(shared <= 1, "two blocks share more than one vertex");
            c.expect(!is_nonseparable(hypergraph_union(a, b)),
                     "two distinct blocks merge into a non-separable piece (not maximal)");
        }
    }

    std::vector<std::string> multi;
    for (const auto& [v, uses] : vertex_blocks)
        if (uses >= 2)
            multi.push_back(v);
    std::sort(multi.begin(), multi.end());
    c.expect(multi == dec.separating, "separating set differs from the multi-block vertices");
    if (is_connected(h))
        c.expect(dec.separating == separating_vertices(h),
                 "separating set differs from the articulation route");
    return c.done();
}

LawOutcome law_block_graph_tree(const Hypergraph& h, const LawEnv&) {
    if (h.has_empty_edges())
        return {};
    Check c{h};
    c.mark();
    BlockDecomposition dec = blocks(h);
    const int nb = static_cast<int>(dec.blocks.size());
    const int ns = static_cast<int>(dec.separating.size());
    std::map<std::string, int> sep_index;
    for (int i = 0; i < ns; ++i)
        sep_index[dec.separating[i]] = nb + i;
    std::vector<int> parent(nb + ns);
    for (int i = 0; i < nb + ns; ++i)
        parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    bool acyclic = true;
    for (const auto& [v, b] : dec.block_graph_links) {
        auto it = sep_index.find(v);
        if (!c.expect(it != sep_index.end() && b >= 0 && b < nb, "dangling block-graph link"))
            return c.done();
        int ra = find(it->second), rb = find(b);
        if (ra == rb)
            acyclic = false;
        else
            parent[ra] = rb;
    }
    c.expect(acyclic, "the block graph has a cycle");
    std::set<int> roots;
    for (int i = 0; i < nb + ns; ++i)
        roots.insert(find(i));
    c.expect(static_cast<int>(roots.size()) == omega(h),
             "the block graph does not split into one tree per component");
    return c.done();
}

LawOutcome law_dual_laws(const Hypergraph& h, const LawEnv&) {
    if (h.is_empty())
        return {};
    Check c{h};
    c.mark();
    Hypergraph d = dual(h);
    c.expect(dual(d) == h, "the double dual is not the original");

    BipartiteIncidenceGraph g = BipartiteIncidenceGraph::of(h);
    BipartiteIncidenceGraph gd = BipartiteIncidenceGraph::of(d);
    std::set<std::pair<std::string, std::string>> links_h, links_d_swapped;
    for (auto [v, e] : g.links())
        links_h.insert({g.node_name(v), g.node_name(e)});
    for (auto [v, e] : gd.links())
        links_d_swapped.insert({gd.node_name(e), gd.node_name(v)});
    c.expect(links_h == links_d_swapped,
             "incidence graphs of the hypergraph and its dual disagree under the swap map");

    for (const auto& v : h.vertex_names())
        c.expect(h.degree(v) == d.edge_cardinality(v),
                 "degree of '" + v + "' differs from its dual edge cardinality");

    if (!h.has_empty_edges() && !h.has_isolated_vertices())
        c.expect(omega(h) == omega(d), "component counts differ between the hypergraph and dual");

    if (h.vertex_count() >= 2 && !h.has_empty_edges()) {
        for (int v = 0; v < h.vertex_count(); ++v) {
            if (vertex_has_singleton_edge(h, v))
                continue;
            const std::string& name = h.vertex_names()[v];
            c.expect(dual(delete_vertex(h, name)) == delete_edge(d, name),
                     "vertex deletion does not transpose to edge deletion for '" + name + "'");
        }
    }
    if (h.edge_count() >= 2 && !h.has_isolated_vertices()) {
        for (int e = 0; e < h.edge_count(); ++e) {
            bool pendant_member = false;
            for (int v : h.members(e))
                pendant_member = pendant_member || h.degree_at(v) == 1;
            if (pendant_member)
                continue;
            const std::string& name = h.edge_names()[e];
            c.expect(dual(delete_edge(h, name)) == delete_vertex(d, name),
                     "edge deletion does not transpose to vertex deletion for '" + name + "'");
        }
    }
    return c.done();
}

LawOutcome law_dual_cuts(const Hypergraph& h, const LawEnv&) {
    if (h.is_empty() || h.has_empty_edges() || h.has_isolated_vertices())
        return {};
    Check c{h};
    c.mark();
    Hypergraph d = dual(h);
    if (h.edge_count() >= 2) {
        for (int e = 0; e < h.edge_count(); ++e) {
            bool pendant_member = false;
            for (int v : h.members(e))
                pendant_member = pendant_member || h.degree_at(v) == 1;
            if (pendant_member)
                continue;
            const std::string& name = h.edge_names()[e];
            c.expect((classify_cut_edge(h, name) != CutEdgeKind::NotCut) ==
                         is_cut_vertex(d, name),
                     "cut edge '" + name + "' does not correspond to a dual cut vertex");
        }
    }
    if (h.vertex_count() >= 2) {
        for (int v = 0; v < h.vertex_count(); ++v) {
            if (vertex_has_singleton_edge(h, v))
                continue;
            const std::string& name = h.vertex_names()[v];
            c.expect(is_cut_vertex(h, name) ==
                         (classify_cut_edge(d, name) != CutEdgeKind::NotCut),
                     "cut vertex '" + name + "' does not correspond to a dual cut edge");
        }
    }
    if (is_connected(h)) {
        for (const auto& v : h.vertex_names())
            c.expect(is_separating_vertex(h, v) ==
                         (classify_cut_edge(d, v) != CutEdgeKind::NotCut),
                     "separating vertex '" + v + "' does not correspond to a dual cut edge");
        for (const auto& e : h.edge_names())
            c.expect((classify_cut_edge(h, e) != CutEdgeKind::NotCut) ==
                         is_separating_vertex(d, e),
                     "cut edge '" + e + "' does not correspond to a dual separating vertex");
    }
    return c.done();
}

LawOutcome law_uniform_no_cut(const Hypergraph& h, const LawEnv&) {
    if (h.is_empty())
        return {};
    int k = h.rank();
    if (h.corank() != k || k < 1)
        return {};
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree_at(v) % k != 0)
            return {};
    Check c{h};
    c.mark();
    c.expect(cut_edges(h).empty(),
             "a uniform hypergraph with all degrees divisible by the rank has a cut edge");
    return c.done();
}

LawOutcome law_even_no_strong_cut(const Hypergraph& h, const LawEnv&) {
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree_at(v) % 2 != 0)
            return {};
    for (int e = 0; e < h.edge_count(); ++e)
        if (h.edge_cardinality_at(e) % 2 != 0)
            return {};
    Check c{h};
    c.mark();
    for (int e = 0; e < h.edge_count(); ++e) {
        const std::string& name = h.edge_names()[e];
        CutEdgeKind kind = classify_cut_edge(h, name);
        c.expect(kind != CutEdgeKind::Strong, "all-even hypergraph has a strong cut edge");
        if (kind == CutEdgeKind::NotCut)
            continue;
        auto mem = h.member_names(name);
        for (const auto& cls : components(delete_edge(h, name)).classes) {
            int meet = 0;
            for (const auto& v : mem)
                meet += std::binary_search(cls.begin(), cls.end(), v) ? 1 : 0;
            c.expect(meet % 2 == 0,
                     "a component of the deletion meets cut edge '" + name + "' oddly");
        }
    }
    return c.done();
}

LawOutcome law_strong_cut_vertex(const Hypergraph& h, const LawEnv&) {
    Check c{h};
    for (int e = 0; e < h.edge_count(); ++e) {
        const std::string& name = h.edge_names()[e];
        CutEdgeKind kind = classify_cut_edge(h, name);
        if (kind == CutEdgeKind::NotCut)
            continue;
        auto mem = h.member_names(name);
        bool one_vertex_in_big_part = false;
        for (const auto& cls : components(delete_edge(h, name)).classes) {
            int meet = 0;
            for (const auto& v : mem)
                meet += std::binary_search(cls.begin(), cls.end(), v) ? 1 : 0;
            if (cls.size() >= 2 && meet == 1)
                one_vertex_in_big_part = true;
        }
        bool strong_small = is_connected(h) && kind == CutEdgeKind::Strong &&
                            h.edge_cardinality_at(e) < h.vertex_count();
        if (one_vertex_in_big_part || strong_small)
            c.expect(!cut_vertices(h).empty(),
                     "cut edge '" + name + "' forces a cut vertex, but none exists");
    }
    return c.done();
}

LawOutcome law_incidence_graph(const Hypergraph& h, const LawEnv&) {
    Check c{h};
    c.mark();
    BipartiteIncidenceGraph g = BipartiteIncidenceGraph::of(h);
    const int n = h.vertex_count();
    for (int e = 0; e < h.edge_count(); ++e)
        c.expect(BipartiteIncidenceGraph::of(delete_edge(h, h.edge_names()[e])) ==
                     g.without_node(n + e),
                 "removing an edge does not match removing its e-node");
    if (n >= 2 && !h.has_empty_edges()) {
        for (int v = 0; v < n; ++v) {
            if (vertex_has_singleton_edge(h, v))
                continue;
            c.expect(BipartiteIncidenceGraph::of(delete_vertex(h, h.vertex_names()[v])) ==
                         g.without_node(v),
                     "removing a vertex does not match removing its v-node");
        }
    }

    auto cuts = graph_cut_vertices(g);
    const int base = static_cast<int>(graph_components(g).size());
    for (int x = 0; x < g.node_count(); ++x) {
        bool def = static_cast<int>(graph_components(g.without_node(x)).size()) > base;
        c.expect(def == std::binary_search(cuts.begin(), cuts.end(), x),
                 "articulation of node " + g.node_label(x) + " disagrees with its definition");
    }

    GraphBlockStructure gb = graph_blocks(g);
    std::set<std::pair<int, int>> seen_links;
    std::map<int, int> node_blocks;
    for (const auto& blk : gb.blocks) {
        for (auto link : blk.links)
            c.expect(seen_links.insert(link).second, "a link lies in two graph blocks");
        for (int x : blk.nodes)
            ++node_blocks[x];
    }
    auto all_links = g.links();
    c.expect(seen_links == std::set<std::pair<int, int>>(all_links.begin(), all_links.end()),
             "graph blocks do not cover the links exactly");
    std::vector<int> multi;
    for (auto [x, uses] : node_blocks)
        if (uses >= 2)
            multi.push_back(x);
    c.expect(multi == gb.cut_vertices, "cut vertices are not exactly the multi-block nodes");
    std::vector<std::pair<int, int>> tree_expected;
    for (int b = 0; b < static_cast<int>(gb.blocks.size()); ++b)
        for (int x : gb.blocks[b].nodes)
            if (std::binary_search(gb.cut_vertices.begin(), gb.cut_vertices.end(), x))
                tree_expected.emplace_back(x, b);
    std::sort(tree_expected.begin(), tree_expected.end());
    c.expect(tree_expected == gb.block_tree, "the block tree misses an incidence");

    // one tree per graph component: acyclic, and component counts agree
    {
        const int nb = static_cast<int>(gb.blocks.size());
        std::vector<int> parent(nb + g.node_count());
        for (std::size_t i = 0; i < parent.size(); ++i)
            parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        bool acyclic = true;
        int joins = 0;
        for (const auto& [x, b] : gb.block_tree) {
            int ra = find(nb + x), rb = find(b);
            if (ra == rb)
                acyclic = false;
            else {
                parent[ra] = rb;
                ++joins;
            }
        }
        c.expect(acyclic, "the graph block tree has a cycle");
        int tree_nodes = nb + static_cast<int>(gb.cut_vertices.size());
        c.expect(tree_nodes - joins == base,
                 "the graph block forest does not have one tree per component");
    }

    std::vector<int> all_nodes(g.node_count());
    for (int x = 0; x < g.node_count(); ++x)
        all_nodes[x] = x;
    auto rec = recognize_hypersubgraph(g, all_nodes, all_links);
    c.expect(rec.has_value() && *rec == h, "the full incidence graph does not read back");
    return c.done();
}

LawOutcome law_cycle_structure(const Hypergraph& h, const LawEnv&) {
    if (h.has_empty_edges())
        return {};
    Check c{h};
    c.mark();
    auto cycles = enumerate_cycles(h);
    if (cycles.empty())
        return c.done();
    BlockDecomposition dec = blocks(h);
    for (const auto& cyc : cycles) {
        c.expect(is_nonseparable(associated_hypersubgraph(h, cyc)),
                 "the full piece of a cycle is separable");
        c.expect(is_nonseparable(associated_subhypergraph(h, cyc).child),
                 "the anchor piece of a cycle is separable");
        std::set<std::string> cyc_edges;
        for (std::size_t i = 1; i < cyc.tokens.size(); i += 2)
            cyc_edges.insert(cyc.tokens[i]);
        bool inside_one_block = false;
        for (const auto& blk : dec.blocks) {
            std::set<std::string> bs(blk.child.edge_names().begin(),
                                     blk.child.edge_names().end());
            bool all = true;
            for (const auto& e : cyc_edges)
                all = all && bs.count(e);
            inside_one_block = inside_one_block || all;
        }
        c.expect(inside_one_block, "a cycle's edges straddle blocks");
    }
    return c.done();
}

LawOutcome law_structure_ops(const Hypergraph& h, const LawEnv&) {
    if (h.vertex_count() > 4 || h.edge_count() > 4)
        return {};
    Check c{h};
    c.mark();
    const int n = h.vertex_count(), m = h.edge_count();

    if (n >= 2) {
        for (const auto& v : h.vertex_names()) {
            std::vector<std::string> rest;
            for (const auto& w : h.vertex_names())
                if (w != v)
                    rest.push_back(w);
            c.expect(delete_vertex(h, v) == induced_subhypergraph(h, rest).child,
                     "vertex deletion differs from the induced restriction");
        }
    }

    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<std::string> sel;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i))
                sel.push_back(h.vertex_names()[i]);
        c.expect(witness_law_holds(h, induced_subhypergraph(h, sel)),
                 "an induced restriction breaks the witness law");
    }

    bool any_nonempty_edge = false;
    for (int e = 0; e < m; ++e)
        any_nonempty_edge = any_nonempty_edge || h.edge_cardinality_at(e) > 0;
    if (any_nonempty_edge) {
        Hypergraph t = trace(h, h.vertex_names());
        std::vector<std::string> expect_vs;
        for (int v = 0; v < n; ++v)
            if (h.degree_at(v) > 0)
                expect_vs.push_back(h.vertex_names()[v]);
        std::sort(expect_vs.begin(), expect_vs.end());
        std::vector<std::string> got_vs = t.vertex_names();
        std::sort(got_vs.begin(), got_vs.end());
        bool edges_match = t.edge_count() == m;
        for (const auto& e : h.edge_names())
            edges_match = edges_match && t.has_edge(e) && t.member_names(e) == h.member_names(e);
        c.expect(got_vs == expect_vs && edges_match,
                 "the full-set trace is not the hypergraph minus isolated vertices");
    } else if (m > 0 || true) {
        bool threw = false;
        try {
            trace(h, h.vertex_names());
        } catch (const HgError& err) {
            threw = err.code() == Errc::ResultHasNoVertices;
        }
        c.expect(threw, "the full-set trace of an edgeless hypergraph must fail");
    }

    BipartiteIncidenceGraph g = BipartiteIncidenceGraph::of(h);
    for (int emask = 0; emask < (1 << m); ++emask) {
        std::vector<Hypergraph::EdgeSpec> specs;
        std::vector<int> nodes;
        std::vector<std::pair<int, int>> links;
        for (int v = 0; v < n; ++v)
            nodes.push_back(v);
        for (int e = 0; e < m; ++e) {
            if (!(emask & (1 << e)))
                continue;
            specs.emplace_back(h.edge_names()[e], h.member_names(h.edge_names()[e]));
            nodes.push_back(n + e);
            for (int v : h.members(e))
                links.emplace_back(v, n + e);
        }
        Hypergraph sub = Hypergraph::build(h.vertex_names(), specs);
        auto rec = recognize_hypersubgraph(g, nodes, links);
        c.expect(rec.has_value() && *rec == sub,
                 "a spanning restriction does not read back from the incidence graph");
        c.expect(find_subhypergraph_witness(h, sub).has_value(),
                 "a spanning restriction has no injective edge-origin witness");
    }
    return c.done();
}

LawOutcome law_find_path(const Hypergraph& h, const LawEnv&) {
    Check c{h};
    c.mark();
    ComponentPartition part = components(h);
    std::map<std::string, int> cls;
    for (std::size_t i = 0; i < part.classes.size(); ++i)
        for (const auto& v : part.classes[i])
            cls[v] = static_cast<int>(i);
    for (const auto& u : h.vertex_names()) {
        for (const auto& v : h.vertex_names()) {
            auto p = find_path(h, u, v);
            c.expect(p.has_value() == (cls[u] == cls[v]),
                     "path existence between '" + u + "' and '" + v +
                         "' disagrees with the components");
            if (p) {
                WalkClass wc = classify(h, *p);
                c.expect(wc.is_walk && (wc.is_path || (u == v && p->tokens.size() == 1)),
                         "the found walk from '" + u + "' to '" + v + "' is not a path");
                c.expect(p->tokens.front() == u && p->tokens.back() == v,
                         "the found path has wrong endpoints");
            }
        }
    }
    return c.done();
}

LawOutcome law_walk_incidence(const Hypergraph& h, const LawEnv&) {
    if (h.vertex_count() > 3 || h.edge_count() > 2)
        return {};
    Check c{h};
    c.mark();
    const int n = h.vertex_count(), m = h.edge_count();
    BipartiteIncidenceGraph g = BipartiteIncidenceGraph::of(h);

    for (int k = 0; k <= 4; ++k) {
        if (k > 0 && m == 0)
            break;
        std::vector<int> vd(k + 1, 0), ed(std::max(k, 1), 0);
        while (true) {
            WalkSeq w;
            for (int i = 0; i <= k; ++i) {
                w.tokens.push_back(h.vertex_names()[vd[i]]);
                if (i < k)
                    w.tokens.push_back(h.edge_names()[ed[i]]);
            }
            WalkClass hc = classify(h, w);
            GraphWalkClass gc = classify_incidence(g, to_incidence_walk(g, w));

            if (!c.expect(hc.is_walk == (gc.is_walk && gc.no_equal_consecutive_v),
                          "walkhood disagrees for '" + w.text() + "'"))
                return c.done();
            if (hc.is_walk) {
                bool ok = true;
                ok = ok && hc.is_trail == gc.is_trail;
                ok = ok && hc.is_path == gc.is_path;
                ok = ok && hc.is_cycle() == gc.is_cycle;
                ok = ok && hc.is_strict_trail == (gc.is_trail && gc.each_e_at_most_once);
                ok = ok && hc.is_pseudo_path == (gc.is_trail && gc.each_v_at_most_once_open);
                ok = ok && hc.is_pseudo_cycle() ==
                               (gc.is_closed && gc.is_trail && gc.each_v_at_most_once_closed);
                ok = ok && hc.is_closed_trail() == (gc.is_closed && gc.is_trail);
                if (!c.expect(ok, "taxonomy disagrees with the incidence graph for '" +
                                      w.text() + "'"))
                    return c.done();

                bool lattice = (!hc.is_strict_trail || hc.is_trail) &&
                               (!hc.is_pseudo_path || hc.is_trail) &&
                               (!hc.is_path || (hc.is_pseudo_path && hc.is_strict_trail));
                if (hc.is_trail && k >= 2) {
                    for (int i = 1; i < k; ++i)
                        lattice = lattice && w.edge_at(i) != w.edge_at(i + 1);
                    if (hc.is_closed_trail())
                        lattice = lattice && w.edge_at(k) != w.edge_at(1);
                }
                if (!c.expect(lattice, "taxonomy implications fail for '" + w.text() + "'"))
                    return c.done();
            }

            int i = 0;
            for (; i <= k; ++i) {
                if (++vd[i] < n)
                    break;
                vd[i] = 0;
            }
            if (i <= k)
                continue;
            int j = 0;
            for (; j < k; ++j) {
                if (++ed[j] < m)
                    break;
                ed[j] = 0;
            }
            if (j >= k)
                break;
        }
    }
    return c.done();
}

LawOutcome law_dual_walks(const Hypergraph& h, const LawEnv&) {
    if (h.vertex_count() > 3 || h.edge_count() > 3 || h.is_empty() || h.has_empty_edges() ||
        h.has_isolated_vertices())
        return {};
    Check c{h};
    c.mark();
    Hypergraph d = dual(h);
    bool stop = false;
    closed_walks(h, 4, false, false,
                 [&](const std::vector<int>& vs, const std::vector<int>& es) {
                     if (stop)
                         return;
                     const int k = static_cast<int>(es.size());
                     for (int i = 0; i < k; ++i)
                         if (es[i] == es[(i + 1) % k])
                             return; // needs cyclically distinct consecutive edges
                     WalkSeq w{walk_tokens(h, vs, es)};
                     WalkClass hc = classify(h, w);
                     WalkSeq wd = dual_closed_walk(h, w);
                     WalkClass cd = classify(d, wd);
                     bool ok = cd.is_walk && cd.is_closed();
                     ok = ok && (!hc.is_closed_trail() || cd.is_closed_trail());
                     ok = ok && (!hc.is_cycle() || cd.is_cycle());
                     ok = ok && (!hc.is_closed_strict_trail() || cd.is_pseudo_cycle());
                     ok = ok && (!hc.is_pseudo_cycle() || cd.is_closed_strict_trail());
                     WalkSeq wdd = dual_closed_walk(d, wd);
                     ok = ok && classify(h, wdd).closed == hc.closed;
                     std::vector<std::string> rotated;
                     for (int j = 1; j < k; ++j) {
                         rotated.push_back(h.vertex_names()[vs[j]]);
                         rotated.push_back(h.edge_names()[es[j]]);
                     }
                     rotated.push_back(h.vertex_names()[vs[k]]);
                     rotated.push_back(h.edge_names()[es[0]]);
                     rotated.push_back(h.vertex_names()[vs[1]]);
                     ok = ok && wdd.tokens == rotated;
                     if (!c.expect(ok, "dual rewrite laws fail for closed walk '" + w.text() +
                                           "'"))
                         stop = true;
                 });
    return c.done();
}

using ElementSet = std::set<std::pair<bool, std::string>>; // (is_edge, name)

ElementSet walk_elements(const WalkSeq& w) {
    ElementSet out;
    for (std::size_t i = 0; i + 1 < w.tokens.size(); ++i)
        out.insert({i % 2 == 1, w.tokens[i]});
    return out;
}

bool pairs_covered(const Hypergraph& h, const std::vector<ElementSet>& sets, bool vertices,
                   bool edges) {
    std::vector<std::pair<bool, std::string>> universe;
    if (vertices)
        for (const auto& v : h.vertex_names())
            universe.push_back({false, v});
    if (edges)
        for (const auto& e : h.edge_names())
            universe.push_back({true, e});
    for (std::size_t i = 0; i < universe.size(); ++i)
        for (std::size_t j = i + 1; j < universe.size(); ++j) {
            bool found = false;
            for (const auto& s : sets)
                if (s.count(universe[i]) && s.count(universe[j])) {
                    found = true;
                    break;
                }
            if (!found)
                return false;
        }
    return true;
}

bool equivalence_hypotheses(const Hypergraph& h) {
    return h.vertex_count() <= 4 && h.edge_count() <= 4 && !h.is_empty() && h.corank() >= 2 &&
           min_degree(h) >= 2 && is_connected(h);
}

LawOutcome law_equivalence_cycles(const Hypergraph& h, const LawEnv&) {
    if (!equivalence_hypotheses(h) || h.vertex_count() < 2)
        return {};
    Check c{h};
    c.mark();
    std::vector<ElementSet> sets;
    for (const auto& w : enumerate_cycles(h))
        sets.push_back(walk_elements(w));
    bool s1 = separating_vertices(h).empty() && cut_edges(h).empty();
    bool s2 = pairs_covered(h, sets, true, true);
    bool s3 = pairs_covered(h, sets, true, false);
    bool s4 = pairs_covered(h, sets, false, true);
    c.expect(s1 == s2 && s2 == s3 && s3 == s4,
             "the four common-cycle statements disagree (" + std::to_string(s1) +
                 std::to_string(s2) + std::to_string(s3) + std::to_string(s4) + ")");
    return c.done();
}

LawOutcome law_equivalence_trails(const Hypergraph& h, const LawEnv&) {
    if (!equivalence_hypotheses(h) || h.vertex_count() < 2)
        return {};
    Check c{h};
    c.mark();
    std::vector<ElementSet> sets;
    for (const auto& w : enumerate_closed_trails(h, ClosedTrailKind::StrictClosedTrail))
        sets.push_back(walk_elements(w));
    bool s1 = cut_edges(h).empty();
    bool s2 = pairs_covered(h, sets, true, true);
    bool s3 = pairs_covered(h, sets, true, false);
    bool s4 = pairs_covered(h, sets, false, true);
    c.expect(s1 == s2 && s2 == s3 && s3 == s4,
             "the four common-strict-closed-trail statements disagree (" + std::to_string(s1) +
                 std::to_string(s2) + std::to_string(s3) + std::to_string(s4) + ")");
    return c.done();
}

LawOutcome law_equivalence_pseudo(const Hypergraph& h, const LawEnv&) {
    if (!equivalence_hypotheses(h) || h.edge_count() < 2)
        return {};
    Check c{h};
    c.mark();
    std::vector<ElementSet> sets;
    for (const auto& w : enumerate_closed_trails(h, ClosedTrailKind::PseudoCycle))
        sets.push_back(walk_elements(w));
    bool s1 = separating_vertices(h).empty();
    bool s2 = pairs_covered(h, sets, true, true);
    bool s3 = pairs_covered(h, sets, false, true);
    bool s4 = pairs_covered(h, sets, true, false);
    c.expect(s1 == s2 && s2 == s3 && s3 == s4,
             "the four common-pseudo-cycle statements disagree (" + std::to_string(s1) +
                 std::to_string(s2) + std::to_string(s3) + std::to_string(s4) + ")");
    c.expect(s1 == cut_edges(dual(h)).empty(),
             "no-separating-vertices does not transfer to a cut-edge-free dual");
    return c.done();
}

LawOutcome law_nonseparable_common_cycle(const Hypergraph& h, const LawEnv&) {
    if (h.vertex_count() > 4 || h.edge_count() > 4 || h.vertex_count() < 2 ||
        h.edge_count() < 2 || !is_nonseparable(h))
        return {};
    std::vector<std::string> all = h.vertex_names();
    std::sort(all.begin(), all.end());
    for (const auto& e : h.edge_names())
        if (h.member_names(e) == all)
            return {}; // some edge covers every vertex
    for (const auto& [e, kind] : cut_edges(h))
        if (kind == CutEdgeKind::Weak)
            return {};
    Check c{h};
    c.mark();
    std::vector<ElementSet> sets;
    for (const auto& w : enumerate_cycles(h))
        sets.push_back(walk_elements(w));
    c.expect(pairs_covered(h, sets, true, false),
             "two vertices of a non-separable, weak-cut-free hypergraph share no cycle");
    c.expect(pairs_covered(h, sets, false, true),
             "two edges of a non-separable, weak-cut-free hypergraph share no cycle");
    return c.done();
}

struct LawDef {
    const char* name;
    LawOutcome (*fn)(const Hypergraph&, const LawEnv&);
};

constexpr LawDef kLaws[] = {
    {"handshake", law_handshake},
    {"matrix-roundtrip", law_matrix_roundtrip},
    {"omega-incidence", law_omega_incidence},
    {"cut-incidence", law_cut_incidence},
    {"cut-edge-bound", law_cut_edge_bound},
    {"strong-acyclic", law_strong_acyclic},
    {"separating-brute", law_separating_brute},
    {"blocks-decomposition", law_blocks_decomposition},
    {"block-graph-tree", law_block_graph_tree},
    {"dual-laws", law_dual_laws},
    {"dual-cuts", law_dual_cuts},
    {"uniform-no-cut", law_uniform_no_cut},
    {"even-no-strong-cut", law_even_no_strong_cut},
    {"strong-cut-vertex", law_strong_cut_vertex},
    {"incidence-graph", law_incidence_graph},
    {"cycle-structure", law_cycle_structure},
    {"structure-ops", law_structure_ops},
    {"find-path", law_find_path},
    {"walk-incidence", law_walk_incidence},
    {"dual-walks", law_dual_walks},
    {"equivalence-cycles", law_equivalence_cycles},
    {"equivalence-trails", law_equivalence_trails},
    {"equivalence-pseudo", law_equivalence_pseudo},
    {"nonseparable-common-cycle", law_nonseparable_common_cycle},
};

} // namespace

std::vector<std::string> verification_law_names() {
    std::vector<std::string> out;
    for (const auto& law : kLaws)
        out.push_back(law.name);
    return out;
}

VerificationReport verify(const EnumSpace& space, const VerifyOptions& options) {
    const long long total = space.size();
    if (total > options.instance_guard)
        raise(Errc::TooLarge, "the space holds " + std::to_string(total) +
                                  " instances; raise the guard to run it");

    std::vector<const LawDef*> selected;
    if (options.laws.empty()) {
        for (const auto& law : kLaws)
            selected.push_back(&law);
    } else {
        for (const auto& name : options.laws) {
            const LawDef* found = nullptr;
            for (const auto& law : kLaws)
                if (name == law.name)
                    found = &law;
            if (!found)
                raise(Errc::PreconditionUnmet, "unknown law '" + name + "'");
            selected.push_back(found);
        }
    }

    const LawEnv env{options.mutate_strong_cut};
    struct Partial {
        std::vector<long long> checked, failures;
        std::vector<std::pair<long long, std::string>> first; // (ordinal, message)
    };
    auto make_partial = [&] {
        Partial p;
        p.checked.assign(selected.size(), 0);
        p.failures.assign(selected.size(), 0);
        p.first.assign(selected.size(), {-1, ""});
        return p;
    };

    auto run_range = [&](long long lo, long long hi, Partial& p) {
        for (long long ord = lo; ord < hi; ++ord) {
            Hypergraph h = space.instance_at(ord);
            for (std::size_t i = 0; i < selected.size(); ++i) {
                LawOutcome out;
                try {
                    out = selected[i]->fn(h, env);
                } catch (const std::exception& ex) {
                    out.applicable = true;
                    out.failure = std::string("unexpected error: ") + ex.what() + "\n" +
                                  emit_hypergraph(h);
                }
                if (!out.applicable)
                    continue;
                ++p.checked[i];
                if (!out.failure.empty()) {
                    ++p.failures[i];
                    if (p.first[i].first < 0)
                        p.first[i] = {ord, out.failure};
                }
            }
        }
    };

    if (options.dedup_isomorphic) {
        // Labelled instances are the default; this mode keeps one
        // representative per isomorphism class instead. Laws are
        // label-invariant, so distinct counterexamples stay distinct.
        Partial p = make_partial();
        std::map<std::pair<int, int>, std::vector<Hypergraph>> classes;
        long long visited = 0;
        for (long long ord = 0; ord < total; ++ord) {
            Hypergraph h = space.instance_at(ord);
            auto& bucket = classes[{h.vertex_count(), h.edge_count()}];
            bool fresh = true;
            for (const auto& seen : bucket)
                fresh = fresh && !are_isomorphic(h, seen);
            if (!fresh)
                continue;
            bucket.push_back(h);
            run_range(ord, ord + 1, p);
            ++visited;
        }
        VerificationReport report;
        report.space = space;
        report.instances = visited;
        for (std::size_t i = 0; i < selected.size(); ++i)
            report.laws.push_back(LawResult{selected[i]->name, p.checked[i], p.failures[i],
                                            p.first[i].second});
        return report;
    }

    int jobs = std::max(1, options.jobs);
    if (total < jobs)
        jobs = std::max<long long>(1, total);
    std::vector<Partial> partials;
    for (int j = 0; j < jobs; ++j)
        partials.push_back(make_partial());
    if (jobs == 1) {
        run_range(0, total, partials[0]);
    } else {
        std::vector<std::thread> threads;
        const long long chunk = (total + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
            long long lo = j * chunk, hi = std::min(total, (j + 1) * chunk);
            threads.emplace_back([&, lo, hi, j] { run_range(lo, hi, partials[j]); });
        }
        for (auto& t : threads)
            t.join();
    }

    VerificationReport report;
    report.space = space;
    report.instances = total;
    for (std::size_t i = 0; i < selected.size(); ++i) {
        LawResult r;
        r.law = selected[i]->name;
        std::pair<long long, std::string> first{-1, ""};
        for (const auto& p : partials) {
            r.checked += p.checked[i];
            r.failures += p.failures[i];
            if (p.first[i].first >= 0 && (first.first < 0 || p.first[i].first < first.first))
                first = p.first[i];
        }
        r.first_counterexample = first.second;
        report.laws.push_back(std::move(r));
    }
    return report;
}

} // namespace hyperconn
