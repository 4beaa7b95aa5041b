#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "hyperconn/hypergraph.hpp"

using namespace hyperconn;
using hyperconn::testing::counterexample_family;
using hyperconn::testing::hg;
using hyperconn::testing::two_vertex_example;

namespace {

Errc thrown(const std::function<void()>& f) {
    try {
        f();
    } catch (const HgError& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::ParseError;
}

} // namespace

TEST_CASE("build accepts the smallest legal hypergraph") {
    Hypergraph h = hg({"v"}, {});
    CHECK(h.vertex_count() == 1);
    CHECK(h.is_trivial());
    CHECK(h.is_empty());
}

TEST_CASE("build accepts the two-vertex example") {
    Hypergraph h = two_vertex_example();
    CHECK(h.vertex_count() == 2);
    CHECK(h.edge_count() == 2);
    CHECK(h.member_names("e1") == std::vector<std::string>{"v"});
    CHECK(h.member_names("e2") == std::vector<std::string>{"u", "v"});
}

TEST_CASE("build rejects exactly the three error cases") {
    CHECK(thrown([] { hg({}, {}); }) == Errc::EmptyVertexSet);
    CHECK(thrown([] { hg({"a", "a"}, {}); }) == Errc::DuplicateId);
    CHECK(thrown([] { hg({"a"}, {{"e", {}}, {"e", {}}}); }) == Errc::DuplicateId);
    CHECK(thrown([] { hg({"a"}, {{"e", {"b"}}}); }) == Errc::UnknownVertexInEdge);

    // everything else goes through: empty edges, parallel edges, shared raw
    // names between the vertex and edge namespaces, repeated members
    Hypergraph h = hg({"a", "b"}, {{"a", {"a", "a", "b"}}, {"e1", {}}, {"e2", {"a", "b"}}});
    CHECK(h.edge_cardinality("a") == 2);
    CHECK(h.has_vertex("a"));
    CHECK(h.has_edge("a"));
}

TEST_CASE("degree") {
    Hypergraph h = two_vertex_example();
    CHECK(h.degree("v") == 2);
    CHECK(h.degree("u") == 1);
    CHECK(thrown([&] { (void)h.degree("w"); }) == Errc::UnknownVertex);

    Hypergraph iso = hg({"a", "b"}, {{"e", {"b"}}});
    CHECK(iso.degree("a") == 0);
    CHECK(iso.has_isolated_vertices());
}

TEST_CASE("counterexample family statistics") {
    for (int n : {2, 4}) {
        Hypergraph h = counterexample_family(n);
        CHECK(h.vertex_count() == 2 * n);
        CHECK(h.edge_count() == 2 * n);
        for (const auto& v : h.vertex_names())
            CHECK(h.degree(v) == n);
        CHECK(h.is_regular(n));
        // e1 lost a vertex and e(n+1) gained one, so the family is not
        // uniform: cardinalities are n-1, n and n+1.
        CHECK(h.rank() == n + 1);
        CHECK(h.corank() == n - 1);
        CHECK_FALSE(h.is_uniform(n));
        // at n >= 3 the untouched full edges on each side are parallel copies
        CHECK(h.is_simple() == (n == 2));
    }
}

TEST_CASE("flags") {
    CHECK(hg({"x"}, {}).flags().empty());

    Hypergraph single = hg({"a", "b"}, {{"e", {"a", "b"}}});
    auto fs = single.flags();
    REQUIRE(fs.size() == 2);
    CHECK(fs[0] == Flag{"a", "e"});
    CHECK(fs[1] == Flag{"b", "e"});

    Hypergraph two = two_vertex_example();
    CHECK(two.flags().size() == 3);
    CHECK(two.flag_count() == 3);
}

TEST_CASE("rank and corank") {
    Hypergraph h = hg({"a", "b"}, {{"e1", {"a", "b"}}, {"e2", {"a"}}});
    CHECK(h.rank() == 2);
    CHECK(h.corank() == 1);
    CHECK(thrown([] { (void)hg({"a"}, {}).rank(); }) == Errc::EmptyEdgeCollection);
    CHECK(thrown([] { (void)hg({"a"}, {}).corank(); }) == Errc::EmptyEdgeCollection);

    Hypergraph unif = hg({"a", "b", "c"}, {{"e1", {"a", "b"}}, {"e2", {"b", "c"}}});
    CHECK(unif.rank() == unif.corank());
    CHECK(unif.is_uniform(2));
}

TEST_CASE("multiplicity and simplicity") {
    Hypergraph par = hg({"a", "b"}, {{"e1", {"a", "b"}}, {"e2", {"a", "b"}}});
    CHECK(par.multiplicity("e1") == 2);
    CHECK(par.multiplicity("e2") == 2);
    CHECK_FALSE(par.is_simple());

    Hypergraph two = two_vertex_example();
    CHECK(two.multiplicity("e1") == 1);
    CHECK(two.multiplicity("e2") == 1);
    CHECK(two.is_simple());

    Hypergraph singleton = hg({"a"}, {{"e", {"a"}}});
    CHECK(singleton.multiplicity("e") == 1);
    CHECK(thrown([&] { (void)singleton.multiplicity("f"); }) == Errc::UnknownEdge);
}

TEST_CASE("uniform and regular on the empty hypergraph") {
    Hypergraph h = hg({"a", "b"}, {});
    CHECK(h.is_regular(0));
    for (int r = 0; r <= 3; ++r)
        CHECK(h.is_uniform(r)); // no edges to violate anything
    CHECK_FALSE(h.is_regular(1));
}

TEST_CASE("uniformity counterexamples") {
    Hypergraph h = hg({"a", "b"}, {{"e1", {"a", "b"}}, {"e2", {"a"}}});
    CHECK_FALSE(h.is_uniform(2));
    CHECK_FALSE(h.is_uniform(1));
}

TEST_CASE("incidence matrix basics") {
    Hypergraph single = hg({"a", "b"}, {{"e", {"a", "b"}}});
    IncidenceMatrix m = single.incidence_matrix();
    CHECK(m.cells == std::vector<std::vector<std::uint8_t>>{{1}, {1}});

    IncidenceMatrix zeros;
    zeros.cells.assign(2, std::vector<std::uint8_t>(3, 0));
    Hypergraph z = Hypergraph::from_incidence_matrix(zeros);
    CHECK(z.vertex_count() == 2);
    CHECK(z.edge_count() == 3);
    CHECK(z.has_isolated_vertices());
    CHECK(z.has_empty_edges());
}

TEST_CASE("from_incidence_matrix rejects malformed input") {
    IncidenceMatrix none;
    CHECK(thrown([&] { Hypergraph::from_incidence_matrix(none); }) == Errc::MalformedMatrix);

    IncidenceMatrix ragged;
    ragged.cells = {{1, 0}, {1}};
    CHECK(thrown([&] { Hypergraph::from_incidence_matrix(ragged); }) == Errc::MalformedMatrix);

    IncidenceMatrix two;
    two.cells = {{2}};
    CHECK(thrown([&] { Hypergraph::from_incidence_matrix(two); }) == Errc::MalformedMatrix);
}

TEST_CASE("every 3x3 matrix survives the round trip") {
    for (int code = 0; code < 512; ++code) {
        IncidenceMatrix m;
        m.cells.assign(3, std::vector<std::uint8_t>(3, 0));
        for (int bit = 0; bit < 9; ++bit)
            m.cells[bit / 3][bit % 3] = (code >> bit) & 1;
        Hypergraph h = Hypergraph::from_incidence_matrix(m);
        CHECK(h.incidence_matrix().cells == m.cells);
    }
}

TEST_CASE("handshake identity on assorted instances") {
    for (const Hypergraph& h :
         {two_vertex_example(), counterexample_family(2),
          hg({"a", "b", "c"}, {{"e1", {}}, {"e2", {"a", "b", "c"}}, {"e3", {"b"}}})}) {
        long long degsum = 0, cardsum = 0;
        for (const auto& v : h.vertex_names())
            degsum += h.degree(v);
        for (const auto& e : h.edge_names())
            cardsum += h.edge_cardinality(e);
        CHECK(degsum == static_cast<long long>(h.flag_count()));
        CHECK(cardsum == static_cast<long long>(h.flag_count()));
    }
}

TEST_CASE("labelled equality ignores insertion order") {
    Hypergraph a = hg({"x", "y"}, {{"e1", {"x"}}, {"e2", {"x", "y"}}});
    Hypergraph b = hg({"y", "x"}, {{"e2", {"y", "x"}}, {"e1", {"x"}}});
    CHECK(a == b);
    CHECK(a != hg({"x", "y"}, {{"e1", {"y"}}, {"e2", {"x", "y"}}}));
    CHECK(a != hg({"x", "y"}, {{"e1", {"x"}}}));
}
