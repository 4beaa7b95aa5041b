#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "hyperconn/connectivity.hpp"
#include "hyperconn/derive.hpp"

using namespace hyperconn;
using hyperconn::testing::counterexample_family;
using hyperconn::testing::hg;
using hyperconn::testing::two_vertex_example;

TEST_CASE("components and omega") {
    CHECK(omega(hg({"v"}, {})) == 1);
    CHECK(is_connected(hg({"v"}, {})));

    Hypergraph cx = counterexample_family(2);
    CHECK(omega(cx) == 1);
    ComponentPartition split = components(delete_edge(cx, "e3"));
    CHECK(split.omega() == 2);
    CHECK(split.classes[0] == std::vector<std::string>{"v1", "v2"});
    CHECK(split.classes[1] == std::vector<std::string>{"v3", "v4"});
    CHECK(split.edge_assignment.at("e1") == 0);
    CHECK(split.edge_assignment.at("e4") == 1);

    Hypergraph stray = hg({"a"}, {{"e", {}}});
    ComponentPartition p = components(stray);
    CHECK(p.omega() == 1);
    CHECK(p.stray_empty_edges == std::vector<std::string>{"e"});
    CHECK(is_connected(stray)); // empty edges do not affect connectivity
}

TEST_CASE("cut edges of a two-edge path are strong") {
    Hypergraph path = hg({"a", "b", "c"}, {{"e1", {"a", "b"}}, {"e2", {"b", "c"}}});
    CHECK(classify_cut_edge(path, "e1") == CutEdgeKind::Strong);
    CHECK(classify_cut_edge(path, "e2") == CutEdgeKind::Strong);
    CHECK(cut_edges(path) ==
          std::vector<std::pair<std::string, CutEdgeKind>>{
              {"e1", CutEdgeKind::Strong}, {"e2", CutEdgeKind::Strong}});
}

TEST_CASE("the family's extra edge is a weak cut edge") {
    for (int n : {2, 4}) {
        Hypergraph cx = counterexample_family(n);
        std::string bridge = "e" + std::to_string(n + 1);
        CHECK(classify_cut_edge(cx, bridge) == CutEdgeKind::Weak);
        CHECK(omega(delete_edge(cx, bridge)) == 2);
    }
}

TEST_CASE("empty and spectator edges are not cut edges") {
    Hypergraph h = hg({"a", "b"}, {{"e1", {"a", "b"}}, {"e2", {"a", "b"}}, {"e3", {}}});
    CHECK(classify_cut_edge(h, "e1") == CutEdgeKind::NotCut);
    CHECK(classify_cut_edge(h, "e3") == CutEdgeKind::NotCut);
    CHECK(cut_edges(h).empty());
    CHECK_THROWS_AS((void)classify_cut_edge(h, "zap"), HgError);
}

TEST_CASE("cut vertices") {
    Hypergraph path = hg({"a", "b", "c"}, {{"e1", {"a", "b"}}, {"e2", {"b", "c"}}});
    CHECK(is_cut_vertex(path, "b"));
    CHECK_FALSE(is_cut_vertex(path, "a"));
    CHECK(cut_vertices(path) == std::vector<std::string>{"b"});

    // v keeps the two pieces together only through a singleton edge, so it
    // separates without being a cut vertex
    Hypergraph two = two_vertex_example();
    CHECK_FALSE(is_cut_vertex(two, "v"));
    CHECK(cut_vertices(two).empty());

    Hypergraph one_edge = hg({"a", "b", "c"}, {{"e", {"a", "b", "c"}}});
    CHECK_FALSE(is_cut_vertex(one_edge, "a"));

    CHECK_THROWS_AS((void)is_cut_vertex(hg({"v"}, {}), "v"), HgError);
}

TEST_CASE("separating vertices") {
    Hypergraph two = two_vertex_example();
    CHECK(is_separating_vertex(two, "v"));
    CHECK_FALSE(is_separating_vertex(two, "u"));
    CHECK(separating_vertices(two) == std::vector<std::string>{"v"});

    Hypergraph one_edge = hg({"a", "b", "c"}, {{"e", {"a", "b", "c"}}});
    CHECK(separating_vertices(one_edge).empty());

    Hypergraph path = hg({"a", "b", "c"}, {{"e1", {"a", "b"}}, {"e2", {"b", "c"}}});
    CHECK(separating_vertices(path) == std::vector<std::string>{"b"});

    Hypergraph split = hg({"a", "b"}, {});
    CHECK_THROWS_AS((void)separating_vertices(split), HgError); // not connected
    Hypergraph dusty = hg({"a"}, {{"e", {}}});
    CHECK_THROWS_AS((void)separating_vertices(dusty), HgError); // empty edge
}

TEST_CASE("the deletion bound for cut vertices") {
    Hypergraph path = hg({"a", "b", "c"}, {{"e1", {"a", "b"}}, {"e2", {"b", "c"}}});
    CHECK(cut_vertex_bound_check(path, "b")); // 2 <= 1 + 2 - 1, tight

    Hypergraph star = hg({"c", "x", "y", "z"},
                         {{"e1", {"c", "x"}}, {"e2", {"c", "y"}}, {"e3", {"c", "z"}}});
    CHECK(omega(delete_vertex(star, "c")) == 3);
    CHECK(cut_vertex_bound_check(star, "c")); // 3 <= 1 + 3 - 1, tight

    CHECK_THROWS_AS((void)cut_vertex_bound_check(path, "a"), HgError); // not a cut vertex
}
