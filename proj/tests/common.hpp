#pragma once

#include <string>
#include <vector>

#include "hyperconn/hypergraph.hpp"

namespace hyperconn::testing {

inline Hypergraph hg(const std::vector<std::string>& vertices,
                     const std::vector<Hypergraph::EdgeSpec>& edges) {
    return Hypergraph::build(vertices, edges);
}

/// Two vertices u, v with a singleton edge at v and an edge {u,v}: the
/// smallest instance whose v is separating but not a cut vertex.
inline Hypergraph two_vertex_example() {
    return hg({"u", "v"}, {{"e1", {"v"}}, {"e2", {"u", "v"}}});
}

/// The even-degree family with a weak cut edge: vertices v1..v2n and edges
/// e1..e2n, where e_j = {v1..vn} for j <= n and {v(n+1)..v2n} for j > n,
/// except that v1 moves from e1 to e(n+1). Every vertex has degree n, yet
/// e(n+1) is a (weak) cut edge.
inline Hypergraph counterexample_family(int n) {
    std::vector<std::string> vertices;
    for (int i = 1; i <= 2 * n; ++i)
        vertices.push_back("v" + std::to_string(i));
    std::vector<Hypergraph::EdgeSpec> edges;
    for (int j = 1; j <= 2 * n; ++j) {
        std::vector<std::string> mem;
        if (j <= n) {
            for (int i = 1; i <= n; ++i)
                if (!(j == 1 && i == 1))
                    mem.push_back("v" + std::to_string(i));
        } else {
            for (int i = n + 1; i <= 2 * n; ++i)
                mem.push_back("v" + std::to_string(i));
            if (j == n + 1)
                mem.push_back("v1");
        }
        edges.emplace_back("e" + std::to_string(j), std::move(mem));
    }
    return hg(vertices, edges);
}

} // namespace hyperconn::testing
