// Drives the installed binary through a pipe: exit codes and output shapes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("HYPERCONN_CLI");
    REQUIRE(cli != nullptr);
    RunResult r;
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture() {
    const char* dir = std::getenv("HYPERCONN_DATA");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/counterexample_n2.hg";
}

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = "/tmp/hyperconn_cli_" + name + ".hg";
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    fwrite(body.data(), 1, body.size(), f);
    fclose(f);
    return path;
}

} // namespace

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli("no-such-command").exit_code == 1);
    CHECK(run_cli("classify").exit_code == 1); // --walk is required
    CHECK(run_cli("").exit_code == 1);         // a subcommand is required
}

TEST_CASE("parse errors exit 2") {
    std::string bad = write_temp("noverts", "edge e1: a\n");
    CHECK(run_cli("stats " + bad).exit_code == 2);
    CHECK(run_cli("stats /no/such/file").exit_code == 2);
}

TEST_CASE("precondition violations exit 3") {
    std::string split = write_temp("split", "vertices: a b\n");
    CHECK(run_cli("separating " + split).exit_code == 3); // not connected
    std::string dusty = write_temp("dusty", "vertices: a\nedge e:\n");
    CHECK(run_cli("blocks " + dusty).exit_code == 3);  // empty edge
    CHECK(run_cli("dual " + split).exit_code == 3);    // no edges
    CHECK(run_cli("find-path x y " + split).exit_code == 3);
}

TEST_CASE("analysis commands succeed on the fixture") {
    CHECK(run_cli("stats " + fixture()).exit_code == 0);
    RunResult cut = run_cli("cut-edges " + fixture());
    CHECK(cut.exit_code == 0);
    CHECK(cut.out.find("e3: Weak") != std::string::npos);
    RunResult sep = run_cli("separating " + fixture());
    CHECK(sep.out == "v1\nv2\n");
    RunResult cv = run_cli("cut-vertices " + fixture());
    CHECK(cv.out == "v1\n");
}

TEST_CASE("walk classification through the CLI") {
    std::string single = write_temp("single", "vertices: a b\nedge e1: a b\n");
    RunResult r = run_cli("classify --walk \"a e1 b\" " + single);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("class: path") != std::string::npos);

    RunResult path = run_cli("find-path a b " + single);
    CHECK(path.out == "a e1 b\n");
}

TEST_CASE("json output is machine readable") {
    RunResult r = run_cli("stats --json " + fixture());
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["vertices"] == 4);
    CHECK(j["rank"] == 3);
    CHECK(j["regular_degree"] == 2);
    CHECK(j["degrees"]["v1"] == 2);

    auto b = nlohmann::json::parse(run_cli("blocks --json " + fixture()).out);
    CHECK(b["blocks"].size() == 3);
    CHECK(b["separating"] == nlohmann::json::array({"v1", "v2"}));
}

TEST_CASE("verify exits 0 on the default space and 4 when sabotaged") {
    RunResult ok = run_cli("verify");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("result: PASS") != std::string::npos);

    RunResult bad =
        run_cli("verify --max-vertices 3 --max-edges 2 --laws strong-acyclic --mutate-strong-cut");
    CHECK(bad.exit_code == 4);
    CHECK(bad.out.find("vertices:") != std::string::npos);

    CHECK(run_cli("verify --laws no-such-law").exit_code == 3);
    CHECK(run_cli("verify --max-vertices 5 --max-edges 5").exit_code == 3); // guard
}

TEST_CASE("dot outputs and the laws listing") {
    RunResult dot = run_cli("block-graph --dot " + fixture());
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("graph block_graph {") == 0);
    RunResult lg = run_cli("line-graph --level 2 --dot " + fixture());
    CHECK(lg.exit_code == 0);
    CHECK(lg.out.find("\"e_e3\" -- \"e_e4\";") != std::string::npos);
    RunResult laws = run_cli("laws");
    CHECK(laws.out.find("strong-acyclic") != std::string::npos);
}
