#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "common.hpp"
#include "hyperconn/oracle.hpp"

using namespace hyperconn;
using hyperconn::testing::counterexample_family;
using hyperconn::testing::hg;
using hyperconn::testing::two_vertex_example;

TEST_CASE("enumeration sizes match the closed form") {
    CHECK(EnumSpace{1, 0, true}.size() == 1);
    CHECK(EnumSpace{1, 1, true}.size() == 3);  // one edgeless + two one-edge shapes
    CHECK(EnumSpace{3, 3, true}.size() == 685);
    CHECK(EnumSpace{3, 3, false}.size() == 444); // bases 1, 3, 7: 4 + 40 + 400
    CHECK(EnumSpace{3, 4, true}.size() == 5053);
    CHECK(EnumSpace{4, 4, true}.size() == 74958);

    // the n=3, m=3 slice alone holds all (2^3)^3 = 512 labelled instances
    long long n3m3 = 0;
    enumerate(EnumSpace{3, 3, true}, [&](const Hypergraph& h) {
        if (h.vertex_count() == 3 && h.edge_count() == 3)
            ++n3m3;
    });
    CHECK(n3m3 == 512);
}

TEST_CASE("enumeration is deterministic and addressable") {
    EnumSpace space{2, 2, true};
    long long i = 0;
    enumerate(space, [&](const Hypergraph& h) { CHECK(h == space.instance_at(i++)); });
    CHECK(i == space.size());

    EnumSpace lean{2, 2, false};
    enumerate(lean, [&](const Hypergraph& h) { CHECK_FALSE(h.has_empty_edges()); });
}

TEST_CASE("cycle enumeration") {
    Hypergraph tree = hg({"a", "b", "c"}, {{"e1", {"a", "b"}}, {"e2", {"b", "c"}}});
    CHECK(enumerate_cycles(tree).empty());

    Hypergraph par = hg({"a", "b"}, {{"e1", {"a", "b"}}, {"e2", {"a", "b"}}});
    auto cycles = enumerate_cycles(par);
    REQUIRE(cycles.size() == 1); // one class after rotation/reflection
    CHECK(cycles[0].tokens == std::vector<std::string>{"a", "e1", "b", "e2", "a"});

    Hypergraph tri = hg({"a", "b", "c"},
                        {{"e1", {"a", "b"}}, {"e2", {"b", "c"}}, {"e3", {"a", "c"}}});
    CHECK(enumerate_cycles(tri).size() == 1);
    CHECK(enumerate_cycles(tri, 2).empty()); // the triangle needs length 3

    CHECK_THROWS_AS((void)enumerate_cycles(tri, 1), HgError);
}

TEST_CASE("common-cycle queries accept vertex and edge tokens") {
    Hypergraph tri = hg({"a", "b", "c"},
                        {{"e1", {"a", "b"}}, {"e2", {"b", "c"}}, {"e3", {"a", "c"}}});
    CHECK(on_common_cycle(tri, "a", "c"));
    CHECK(on_common_cycle(tri, "e1", "e3"));
    CHECK(on_common_cycle(tri, "a", "e2"));

    Hypergraph path = hg({"a", "b", "c"}, {{"e1", {"a", "b"}}, {"e2", {"b", "c"}}});
    CHECK_FALSE(on_common_cycle(path, "a", "c"));
    CHECK_THROWS_AS((void)on_common_cycle(path, "a", "zap"), HgError);
}

TEST_CASE("closed trail enumeration") {
    Hypergraph cyc = hg({"a", "b", "c"},
                        {{"e1", {"a", "b"}}, {"e2", {"b", "c"}}, {"e3", {"a", "c"}}});
    auto strict = enumerate_closed_trails(cyc, ClosedTrailKind::StrictClosedTrail);
    auto cycles = enumerate_cycles(cyc);
    CHECK(strict == cycles); // in a 2-uniform cycle the notions coincide

    Hypergraph single = hg({"a", "b"}, {{"e", {"a", "b"}}});
    CHECK(enumerate_closed_trails(single, ClosedTrailKind::StrictClosedTrail).empty());
    CHECK(enumerate_closed_trails(single, ClosedTrailKind::PseudoCycle).empty());

    // the figure-eight is a strict closed trail but no pseudo cycle
    Hypergraph eight = hg({"a", "b", "c"}, {{"e1", {"a", "b"}}, {"e2", {"a", "b"}},
                                            {"f1", {"b", "c"}}, {"f2", {"b", "c"}}});
    bool found_eight = false;
    for (const auto& t : enumerate_closed_trails(eight, ClosedTrailKind::StrictClosedTrail))
        found_eight = found_eight || t.length() == 4;
    CHECK(found_eight);
    for (const auto& t : enumerate_closed_trails(eight, ClosedTrailKind::PseudoCycle))
        CHECK(t.length() <= 3);
}

TEST_CASE("pseudo cycles of the dual mirror strict closed trails") {
    Hypergraph h = hg({"a", "b", "c"}, {{"e1", {"a", "b"}}, {"e2", {"a", "b", "c"}},
                                        {"e3", {"b", "c"}}});
    auto pseudo = enumerate_closed_trails(h, ClosedTrailKind::PseudoCycle);
    auto dual_strict = enumerate_closed_trails(dual(h), ClosedTrailKind::StrictClosedTrail);
    CHECK(pseudo.size() == dual_strict.size());
}

TEST_CASE("definition-level separating search") {
    Hypergraph two = two_vertex_example();
    CHECK(brute_separating(two, "v"));
    CHECK_FALSE(brute_separating(two, "u"));

    Hypergraph one_edge = hg({"a", "b", "c"}, {{"e", {"a", "b", "c"}}});
    for (const auto& v : one_edge.vertex_names())
        CHECK_FALSE(brute_separating(one_edge, v));

    CHECK_THROWS_AS((void)brute_separating(two, "v", 1), HgError); // guard
    CHECK_THROWS_AS((void)brute_separating(hg({"a", "b"}, {}), "a"), HgError);
}

TEST_CASE("brute-force isomorphism") {
    Hypergraph a = hg({"x", "y"}, {{"p", {"x"}}, {"q", {"x", "y"}}});
    CHECK(are_isomorphic(a, two_vertex_example()));
    CHECK(are_isomorphic(a, a));

    // an equivalence relation: symmetric, and transitive along relabelings
    Hypergraph b = two_vertex_example();
    Hypergraph c3 = hg({"1", "2"}, {{"f1", {"2"}}, {"f2", {"1", "2"}}});
    CHECK(are_isomorphic(b, a));
    CHECK(are_isomorphic(b, c3));
    CHECK(are_isomorphic(a, c3));

    CHECK_FALSE(are_isomorphic(hg({"a", "b"}, {{"e", {"a", "b"}}}), hg({"a", "b"}, {})));
    CHECK_FALSE(are_isomorphic(hg({"a", "b"}, {{"e", {"a"}}}), hg({"a", "b"}, {{"e", {"a", "b"}}})));

    Hypergraph big = counterexample_family(4); // eight vertices and edges: at the guard
    CHECK(are_isomorphic(big, big));
    CHECK_THROWS_AS((void)are_isomorphic(counterexample_family(5), counterexample_family(5)),
                    HgError);
}

TEST_CASE("verify passes on a small space") {
    VerificationReport report = verify(EnumSpace{2, 2, true});
    CHECK(report.ok());
    CHECK(report.instances == 28);
    CHECK(report.laws.size() == verification_law_names().size());
    for (const auto& law : report.laws)
        CHECK(law.failures == 0);
}

TEST_CASE("verify splits across workers without changing the report") {
    VerifyOptions serial;
    VerifyOptions parallel;
    parallel.jobs = 3;
    VerificationReport a = verify(EnumSpace{2, 2, true}, serial);
    VerificationReport b = verify(EnumSpace{2, 2, true}, parallel);
    REQUIRE(a.laws.size() == b.laws.size());
    for (std::size_t i = 0; i < a.laws.size(); ++i) {
        CHECK(a.laws[i].checked == b.laws[i].checked);
        CHECK(a.laws[i].failures == b.laws[i].failures);
    }
}

TEST_CASE("a sabotaged classifier is caught with a concrete witness") {
    VerifyOptions opts;
    opts.laws = {"strong-acyclic"};
    opts.mutate_strong_cut = true;
    VerificationReport report = verify(EnumSpace{3, 2, true}, opts);
    CHECK_FALSE(report.ok());
    REQUIRE(report.laws.size() == 1);
    CHECK(report.laws[0].failures > 0);
    CHECK(report.laws[0].first_counterexample.find("vertices:") != std::string::npos);
}

TEST_CASE("isomorphism dedup keeps one representative per class") {
    VerifyOptions opts;
    opts.dedup_isomorphic = true;
    opts.laws = {"handshake"};
    VerificationReport report = verify(EnumSpace{2, 1, true}, opts);
    CHECK(report.ok());
    // 8 labelled instances collapse to 7 classes: only the two one-vertex
    // singleton-edge shapes of n=2 coincide
    CHECK(report.instances == 7);
    CHECK(report.laws[0].checked == 7);
}

TEST_CASE("verify guards and law selection") {
    VerifyOptions opts;
    opts.instance_guard = 10;
    CHECK_THROWS_AS((void)verify(EnumSpace{3, 3, true}, opts), HgError);

    VerifyOptions unknown;
    unknown.laws = {"no-such-law"};
    CHECK_THROWS_AS((void)verify(EnumSpace{1, 0, true}, unknown), HgError);
}
