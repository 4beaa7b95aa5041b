// Command-line front end: file parsing, analysis commands, DOT output, and
// the exhaustive verification sweep.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperconn/blocks.hpp"
#include "hyperconn/connectivity.hpp"
#include "hyperconn/derive.hpp"
#include "hyperconn/incidence_graph.hpp"
#include "hyperconn/oracle.hpp"
#include "hyperconn/textio.hpp"
#include "hyperconn/walks.hpp"

using nlohmann::json;
using namespace hyperconn;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        raise(Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += sep;
        out += xs[i];
    }
    return out;
}

void cmd_stats(const Hypergraph& h, bool as_json) {
    bool uniform = h.is_empty() || h.rank() == h.corank();
    bool regular = true;
    for (int v = 0; v < h.vertex_count(); ++v)
        regular = regular && h.degree_at(v) == h.degree_at(0);
    int reg_degree = h.degree_at(0);
    std::vector<std::string> names = h.vertex_names();
    std::sort(names.begin(), names.end());

    if (as_json) {
        json j;
        j["vertices"] = h.vertex_count();
        j["edges"] = h.edge_count();
        j["rank"] = h.is_empty() ? json(nullptr) : json(h.rank());
        j["corank"] = h.is_empty() ? json(nullptr) : json(h.corank());
        j["simple"] = h.is_simple();
        j["uniform"] = uniform;
        j["uniform_rank"] = uniform && !h.is_empty() ? json(h.rank()) : json(nullptr);
        j["regular"] = regular;
        j["regular_degree"] = regular ? json(reg_degree) : json(nullptr);
        json degs = json::object();
        for (const auto& v : names)
            degs[v] = h.degree(v);
        j["degrees"] = degs;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "vertices: " << h.vertex_count() << "\n";
    std::cout << "edges: " << h.edge_count() << "\n";
    std::cout << "rank: " << (h.is_empty() ? "-" : std::to_string(h.rank())) << "\n";
    std::cout << "corank: " << (h.is_empty() ? "-" : std::to_string(h.corank())) << "\n";
    std::cout << "simple: " << (h.is_simple() ? "yes" : "no") << "\n";
    if (uniform)
        std::cout << "uniform: yes" << (h.is_empty() ? "" : " (rank " + std::to_string(h.rank()) + ")")
                  << "\n";
    else
        std::cout << "uniform: no\n";
    if (regular)
        std::cout << "regular: yes (degree " << reg_degree << ")\n";
    else
        std::cout << "regular: no\n";
    std::cout << "degrees:\n";
    for (const auto& v : names)
        std::cout << "  " << v << ": " << h.degree(v) << "\n";
}

void cmd_components(const Hypergraph& h, bool as_json) {
    ComponentPartition part = components(h);
    if (as_json) {
        json j;
        j["omega"] = part.omega();
        j["components"] = part.classes;
        json assign = json::object();
        for (const auto& [e, cls] : part.edge_assignment)
            assign[e] = cls;
        j["edge_assignment"] = assign;
        j["stray_empty_edges"] = part.stray_empty_edges;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "omega: " << part.omega() << "\n";
    for (std::size_t i = 0; i < part.classes.size(); ++i)
        std::cout << "component " << i + 1 << ": " << join(part.classes[i]) << "\n";
    if (!part.stray_empty_edges.empty())
        std::cout << "stray empty edges: " << join(part.stray_empty_edges) << "\n";
}

void cmd_cut_edges(const Hypergraph& h, bool as_json) {
    auto edges = cut_edges(h);
    if (as_json) {
        json list = json::array();
        for (const auto& [e, kind] : edges)
            list.push_back({{"edge", e}, {"kind", cut_edge_kind_name(kind)}});
        std::cout << json{{"cut_edges", list}}.dump(2) << "\n";
        return;
    }
    for (const auto& [e, kind] : edges)
        std::cout << e << ": " << cut_edge_kind_name(kind) << "\n";
}

void cmd_cut_vertices(const Hypergraph& h, bool as_json) {
    auto vs = cut_vertices(h);
    if (as_json) {
        std::cout << json{{"cut_vertices", vs}}.dump(2) << "\n";
        return;
    }
    for (const auto& v : vs)
        std::cout << v << "\n";
}

void cmd_separating(const Hypergraph& h, bool as_json) {
    auto vs = separating_vertices(h);
    if (as_json) {
        std::cout << json{{"separating_vertices", vs}}.dump(2) << "\n";
        return;
    }
    for (const auto& v : vs)
        std::cout << v << "\n";
}

void print_blocks_text(const BlockDecomposition& dec) {
    std::cout << "separating: " << (dec.separating.empty() ? "-" : join(dec.separating)) << "\n";
    for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
        std::vector<std::string> vs = dec.blocks[b].child.vertex_names();
        std::vector<std::string> es = dec.blocks[b].child.edge_names();
        std::sort(vs.begin(), vs.end());
        std::sort(es.begin(), es.end());
        std::cout << "block " << b + 1 << ": vertices: " << join(vs)
                  << " | edges: " << (es.empty() ? "-" : join(es)) << "\n";
    }
}

json blocks_json(const BlockDecomposition& dec) {
    json blocks_list = json::array();
    for (const auto& blk : dec.blocks) {
        std::vector<std::string> vs = blk.child.vertex_names();
        std::vector<std::string> es = blk.child.edge_names();
        std::sort(vs.begin(), vs.end());
        std::sort(es.begin(), es.end());
        blocks_list.push_back({{"vertices", vs}, {"edges", es}});
    }
    json links = json::array();
    for (const auto& [v, b] : dec.block_graph_links)
        links.push_back({{"vertex", v}, {"block", b}});
    return json{{"blocks", blocks_list}, {"separating", dec.separating}, {"block_graph", links}};
}

void cmd_blocks(const Hypergraph& h, bool as_json) {
    BlockDecomposition dec = blocks(h);
    if (as_json)
        std::cout << blocks_json(dec).dump(2) << "\n";
    else
        print_blocks_text(dec);
}

void cmd_block_graph(const Hypergraph& h, bool dot, bool as_json) {
    if (dot) {
        std::cout << emit_block_graph_dot(h);
        return;
    }
    BlockDecomposition dec = block_graph(h);
    if (as_json) {
        std::cout << blocks_json(dec).dump(2) << "\n";
        return;
    }
    print_blocks_text(dec);
    for (const auto& [v, b] : dec.block_graph_links)
        std::cout << "link: " << v << " -- block " << b + 1 << "\n";
}

void cmd_incidence(const Hypergraph& h, bool dot) {
    if (dot) {
        std::cout << emit_incidence_dot(h);
        return;
    }
    std::vector<std::string> vs = h.vertex_names(), es = h.edge_names();
    std::sort(vs.begin(), vs.end());
    std::sort(es.begin(), es.end());
    std::cout << "v-nodes: " << join(vs) << "\n";
    std::cout << "e-nodes: " << (es.empty() ? "-" : join(es)) << "\n";
    std::cout << "links:\n";
    std::vector<std::pair<std::string, std::string>> links;
    for (const auto& e : h.edge_names())
        for (const auto& v : h.member_names(e))
            links.emplace_back(v, e);
    std::sort(links.begin(), links.end());
    for (const auto& [v, e] : links)
        std::cout << "  " << v << " -- " << e << "\n";
}

void cmd_line_graph(const Hypergraph& h, int level, bool dot) {
    if (dot) {
        std::cout << emit_line_graph_dot(h, level);
        return;
    }
    LineGraph lg = line_graph(h, level);
    std::vector<std::string> es = lg.edges;
    std::sort(es.begin(), es.end());
    std::cout << "nodes: " << (es.empty() ? "-" : join(es)) << "\n";
    std::cout << "links:\n";
    for (const auto& [a, b] : lg.links)
        std::cout << "  " << a << " -- " << b << "\n";
}

void cmd_classify(const Hypergraph& h, const std::string& walk_text, bool as_json) {
    WalkSeq w = WalkSeq::parse(walk_text);
    WalkClass c = classify(h, w);
    if (as_json) {
        json j;
        j["walk"] = c.is_walk;
        j["closed"] = c.is_closed();
        j["trail"] = c.is_trail;
        j["strict_trail"] = c.is_strict_trail;
        j["pseudo_path"] = c.is_pseudo_path;
        j["path"] = c.is_path;
        j["closed_class"] = closed_kind_name(c.closed);
        j["class"] = c.summary();
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "walk: " << (c.is_walk ? "yes" : "no") << "\n";
    if (c.is_walk) {
        std::cout << "length: " << w.length() << "\n";
        std::cout << "closed: " << (c.is_closed() ? "yes" : "no") << "\n";
        std::cout << "trail: " << (c.is_trail ? "yes" : "no") << "\n";
        std::cout << "strict trail: " << (c.is_strict_trail ? "yes" : "no") << "\n";
        std::cout << "pseudo path: " << (c.is_pseudo_path ? "yes" : "no") << "\n";
        std::cout << "path: " << (c.is_path ? "yes" : "no") << "\n";
    }
    std::cout << "class: " << c.summary() << "\n";
}

void cmd_find_path(const Hypergraph& h, const std::string& u, const std::string& v, bool as_json) {
    auto p = find_path(h, u, v);
    if (as_json) {
        std::cout << json{{"path", p ? json(p->tokens) : json(nullptr)}}.dump(2) << "\n";
        return;
    }
    if (p)
        std::cout << p->text() << "\n";
    else
        std::cout << "no path\n";
}

int cmd_verify(const EnumSpace& space, const VerifyOptions& opts, bool as_json) {
    VerificationReport report = verify(space, opts);
    if (as_json) {
        json laws = json::array();
        for (const auto& law : report.laws)
            laws.push_back({{"law", law.law},
                            {"checked", law.checked},
                            {"failures", law.failures},
                            {"counterexample", law.first_counterexample}});
        json j{{"instances", report.instances},
               {"max_vertices", space.max_vertices},
               {"max_edges", space.max_edges},
               {"empty_edges", space.allow_empty_edges},
               {"laws", laws},
               {"ok", report.ok()}};
        std::cout << j.dump(2) << "\n";
        return report.ok() ? kExitOk : kExitVerification;
    }
    std::cout << "space: max-vertices=" << space.max_vertices << " max-edges=" << space.max_edges
              << " empty-edges=" << (space.allow_empty_edges ? "yes" : "no") << "\n";
    std::cout << "instances: " << report.instances << "\n";
    for (const auto& law : report.laws)
        std::cout << "law " << law.law << ": checked=" << law.checked
                  << " failures=" << law.failures << "\n";
    for (const auto& law : report.laws)
        if (law.failures > 0)
            std::cout << "counterexample (" << law.law << "):\n"
                      << law.first_counterexample << "\n";
    std::cout << "result: " << (report.ok() ? "PASS" : "FAIL") << "\n";
    return report.ok() ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph connectivity toolkit"};
    app.require_subcommand(1);

    std::string file;
    bool as_json = false;
    bool dot = false;
    int level = 1;
    std::string walk_text;
    std::string path_u, path_v;

    auto add_input = [&](CLI::App* cmd, bool with_json = true) {
        cmd->add_option("file", file, "input file ('-' or absent reads stdin)");
        if (with_json)
            cmd->add_flag("--json", as_json, "machine-readable output");
        return cmd;
    };

    auto* c_stats = add_input(app.add_subcommand("stats", "order, size, rank, degrees"));
    auto* c_components = add_input(app.add_subcommand("components", "connected components"));
    auto* c_cut_edges = add_input(app.add_subcommand("cut-edges", "cut edges with strong/weak tags"));
    auto* c_cut_vertices = add_input(app.add_subcommand("cut-vertices", "cut vertices"));
    auto* c_separating = add_input(app.add_subcommand("separating", "separating vertices"));
    auto* c_blocks = add_input(app.add_subcommand("blocks", "block decomposition"));
    auto* c_block_graph = add_input(app.add_subcommand("block-graph", "block graph (tree)"));
    c_block_graph->add_flag("--dot", dot, "emit DOT");
    auto* c_incidence = add_input(app.add_subcommand("incidence", "incidence graph"), false);
    c_incidence->add_flag("--dot", dot, "emit DOT");
    auto* c_line_graph = add_input(app.add_subcommand("line-graph", "level-l line graph"), false);
    c_line_graph->add_flag("--dot", dot, "emit DOT");
    c_line_graph->add_option("--level", level, "minimum shared vertices for a link")
        ->default_val(1);
    auto* c_dual = add_input(app.add_subcommand("dual", "emit the dual in file format"), false);
    auto* c_classify = add_input(app.add_subcommand("classify", "classify a walk"));
    c_classify->add_option("--walk", walk_text, "alternating tokens, e.g. \"v0 e1 v1\"")
        ->required();
    auto* c_find_path = app.add_subcommand("find-path", "vertex-to-vertex path");
    c_find_path->add_option("u", path_u, "start vertex")->required();
    c_find_path->add_option("v", path_v, "end vertex")->required();
    add_input(c_find_path); // the file positional comes after u and v

    auto* c_verify = app.add_subcommand("verify", "exhaustive law sweep over small instances");
    EnumSpace space;
    VerifyOptions vopts;
    bool no_empty = false;
    c_verify->add_option("--max-vertices", space.max_vertices, "largest vertex count")
        ->default_val(3);
    c_verify->add_option("--max-edges", space.max_edges, "largest edge count")->default_val(3);
    c_verify->add_flag("--no-empty-edges", no_empty, "skip instances with empty edges");
    c_verify->add_option("--laws", vopts.laws, "laws to run (default: all)")
        ->delimiter(',');
    c_verify->add_option("--jobs", vopts.jobs, "worker threads")->default_val(1);
    c_verify->add_option("--guard", vopts.instance_guard, "largest allowed instance count")
        ->default_val(500000);
    c_verify->add_flag("--dedup-isomorphic", vopts.dedup_isomorphic,
                       "check one representative per isomorphism class");
    c_verify->add_flag("--mutate-strong-cut", vopts.mutate_strong_cut,
                       "sabotage the strong/weak classifier (harness sanity check)")
        ->group("");
    c_verify->add_flag("--json", as_json, "machine-readable output");
    auto* c_laws = app.add_subcommand("laws", "list verification law names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(c_verify)) {
            space.allow_empty_edges = !no_empty;
            return cmd_verify(space, vopts, as_json);
        }
        if (app.got_subcommand(c_laws)) {
            for (const auto& name : verification_law_names())
                std::cout << name << "\n";
            return kExitOk;
        }

        Hypergraph h = parse_hypergraph(slurp(file));
        if (app.got_subcommand(c_stats))
            cmd_stats(h, as_json);
        else if (app.got_subcommand(c_components))
            cmd_components(h, as_json);
        else if (app.got_subcommand(c_cut_edges))
            cmd_cut_edges(h, as_json);
        else if (app.got_subcommand(c_cut_vertices))
            cmd_cut_vertices(h, as_json);
        else if (app.got_subcommand(c_separating))
            cmd_separating(h, as_json);
        else if (app.got_subcommand(c_blocks))
            cmd_blocks(h, as_json);
        else if (app.got_subcommand(c_block_graph))
            cmd_block_graph(h, dot, as_json);
        else if (app.got_subcommand(c_incidence))
            cmd_incidence(h, dot);
        else if (app.got_subcommand(c_line_graph))
            cmd_line_graph(h, level, dot);
        else if (app.got_subcommand(c_dual))
            std::cout << emit_hypergraph(dual(h));
        else if (app.got_subcommand(c_classify))
            cmd_classify(h, walk_text, as_json);
        else if (app.got_subcommand(c_find_path))
            cmd_find_path(h, path_u, path_v, as_json);
        return kExitOk;
    } catch (const HgError& e) {
        std::cerr << e.what() << "\n";
        return e.code() == Errc::ParseError ? kExitParse : kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}
