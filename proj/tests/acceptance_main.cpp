// Acceptance suite: one pass/fail line per criterion. The CLI-level checks
// need HYPERCONN_CLI (path to the binary) and HYPERCONN_DATA (fixture
// directory), which ctest provides.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "common.hpp"
#include "hyperconn/blocks.hpp"
#include "hyperconn/connectivity.hpp"
#include "hyperconn/derive.hpp"
#include "hyperconn/oracle.hpp"
#include "hyperconn/textio.hpp"

using namespace hyperconn;
using hyperconn::testing::counterexample_family;
using hyperconn::testing::hg;
using hyperconn::testing::two_vertex_example;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& text, bool ok) {
    std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " - " << text
              << std::endl;
    if (!ok)
        ++g_failures;
}

bool sweep_clean(const EnumSpace& space, const std::vector<std::string>& laws,
                 std::string& detail) {
    VerifyOptions opts;
    opts.laws = laws;
    opts.jobs = 4;
    VerificationReport report = verify(space, opts);
    std::ostringstream out;
    out << report.instances << " instances";
    for (const auto& law : report.laws) {
        if (law.failures > 0)
            out << "; " << law.law << " FAILED (" << law.failures << "), e.g.\n"
                << law.first_counterexample;
    }
    detail = out.str();
    return report.ok();
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("HYPERCONN_CLI");
    RunResult r;
    if (!cli)
        return r;
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data_file(const std::string& name) {
    const char* dir = std::getenv("HYPERCONN_DATA");
    return (dir ? std::string(dir) : std::string("tests/data")) + "/" + name;
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main() {
    std::string detail;

    // 1. the full law sweep on the small space (empty edges included)
    {
        bool ok = sweep_clean(
            EnumSpace{3, 4, true},
            {"handshake", "omega-incidence", "cut-incidence", "cut-edge-bound", "strong-acyclic",
             "separating-brute", "blocks-decomposition", "block-graph-tree", "dual-laws",
             "dual-cuts"},
            detail);
        criterion(1, "exhaustive law sweep, vertices<=3 edges<=4 (" + detail + ")", ok);
    }

    // 2. the cheap laws on the larger space
    {
        bool ok = sweep_clean(EnumSpace{4, 4, true},
                              {"handshake", "omega-incidence", "cut-incidence"}, detail);
        criterion(2, "extended sweep, vertices<=4 edges<=4 (" + detail + ")", ok);
    }

    // 3. the even-degree family with the weak bridge edge
    {
        bool ok = true;
        for (int n : {2, 4}) {
            Hypergraph cx = counterexample_family(n);
            std::string bridge = "e" + std::to_string(n + 1);
            ok = ok && cx.is_regular(n) && n % 2 == 0;
            for (const auto& v : cx.vertex_names())
                ok = ok && cx.degree(v) % 2 == 0;
            ok = ok && classify_cut_edge(cx, bridge) == CutEdgeKind::Weak;
            ok = ok && omega(delete_edge(cx, bridge)) == 2;
        }
        criterion(3, "family instances n=2 and n=4: even-regular with a weak cut edge", ok);
    }

    // 4. the two-vertex example: separating without cutting, two blocks
    {
        Hypergraph two = two_vertex_example();
        bool ok = is_separating_vertex(two, "v") && !is_cut_vertex(two, "v");
        BlockDecomposition dec = blocks(two);
        ok = ok && dec.blocks.size() == 2;
        ok = ok && dec.blocks[0].child == hg({"u", "v"}, {{"e2", {"u", "v"}}});
        ok = ok && dec.blocks[1].child == hg({"v"}, {{"e1", {"v"}}});
        criterion(4, "two-vertex example: v separates, v is no cut vertex, blocks match", ok);
    }

    // 5. walk taxonomy against the incidence graph, all sequences length<=4
    {
        bool ok = sweep_clean(EnumSpace{3, 2, true}, {"walk-incidence"}, detail);
        criterion(5, "walk taxonomy cross-check, vertices<=3 edges<=2 (" + detail + ")", ok);
    }

    // 6. dual rewriting of closed walks length<=4
    {
        bool ok = sweep_clean(EnumSpace{3, 3, false}, {"dual-walks"}, detail);
        criterion(6, "dual closed-walk laws, vertices<=3 edges<=3 (" + detail + ")", ok);
    }

    // 7. the three four-way equivalence sweeps
    {
        bool ok = sweep_clean(EnumSpace{4, 4, false},
                              {"equivalence-cycles", "equivalence-trails", "equivalence-pseudo"},
                              detail);
        criterion(7, "common cycle / strict closed trail / pseudo cycle equivalences (" + detail +
                         ")",
                  ok);
    }

    // 8. the sabotaged classifier must be caught through the CLI
    {
        RunResult r = run_cli("verify --max-vertices 3 --max-edges 2 --laws strong-acyclic "
                              "--mutate-strong-cut");
        bool ok = r.exit_code == 4 && r.out.find("vertices:") != std::string::npos &&
                  r.out.find("FAIL") != std::string::npos;
        criterion(8, "sabotaged strong/weak classifier exits 4 with a concrete witness", ok);
    }

    // 9. CLI determinism, dual round-trip, and the fixture goldens
    {
        std::string fixture = data_file("counterexample_n2.hg");
        RunResult dual1 = run_cli("dual " + fixture);
        RunResult dual2 = run_cli("dual " + fixture);
        bool ok = dual1.exit_code == 0 && dual1.out == dual2.out;
        ok = ok && parse_hypergraph(dual1.out) == dual(counterexample_family(2));

        RunResult stats = run_cli("stats " + fixture);
        RunResult cut = run_cli("cut-edges " + fixture);
        RunResult dot1 = run_cli("incidence --dot " + fixture);
        RunResult dot2 = run_cli("incidence --dot " + fixture);
        ok = ok && stats.exit_code == 0 && stats.out == slurp_file(data_file("counterexample_n2.stats.golden"));
        ok = ok && cut.exit_code == 0 && cut.out == slurp_file(data_file("counterexample_n2.cut_edges.golden"));
        ok = ok && dot1.exit_code == 0 && dot1.out == slurp_file(data_file("counterexample_n2.incidence.golden"));
        ok = ok && dot1.out == dot2.out;
        criterion(9, "CLI determinism, dual round-trip, fixture goldens", ok);
    }

    std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                  : "acceptance: FAILURES PRESENT")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
