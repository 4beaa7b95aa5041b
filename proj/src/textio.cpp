#include "hyperconn/textio.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "hyperconn/blocks.hpp"
#include "hyperconn/connectivity.hpp"
#include "hyperconn/incidence_graph.hpp"

namespace hyperconn {

namespace {

bool id_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

[[noreturn]] void parse_fail(int line, int col, const std::string& what) {
    raise(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                ": " + what);
}

struct Tok {
    std::string text;
    int col; // 1-based
};

// Splits one comment-stripped line into id tokens and ':' markers.
std::vector<Tok> lex_line(const std::string& line, int lineno) {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        } else if (c == ':') {
            out.push_back({":", static_cast<int>(i) + 1});
            ++i;
        } else if (id_char(c)) {
            std::size_t j = i;
            while (j < line.size() && id_char(line[j]))
                ++j;
            out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
            i = j;
        } else {
            parse_fail(lineno, static_cast<int>(i) + 1,
                       std::string("unexpected character '") + c + "'");
        }
    }
    return out;
}

} // namespace

Hypergraph parse_hypergraph(const std::string& text) {
    std::vector<std::string> vertices;
    std::vector<Hypergraph::EdgeSpec> edges;
    std::set<std::string> seen_vertices, seen_edges;
    bool have_vertices = false;
    int vertices_line = 0;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        auto toks = lex_line(line, lineno);
        if (toks.empty())
            continue;

        if (toks[0].text == "vertices") {
            if (toks.size() < 2 || toks[1].text != ":")
                parse_fail(lineno, toks[0].col, "expected 'vertices:'");
            if (have_vertices)
                parse_fail(lineno, toks[0].col, "second vertices line (only one is allowed)");
            have_vertices = true;
            vertices_line = lineno;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                if (toks[i].text == ":")
                    parse_fail(lineno, toks[i].col, "unexpected ':'");
                if (!seen_vertices.insert(toks[i].text).second)
                    parse_fail(lineno, toks[i].col, "duplicate vertex '" + toks[i].text + "'");
                vertices.push_back(toks[i].text);
            }
            if (vertices.empty())
                parse_fail(lineno, toks[0].col, "the vertices line needs at least one id");
        } else if (toks[0].text == "edge") {
            if (!have_vertices)
                parse_fail(lineno, toks[0].col, "edge before the vertices line");
            if (toks.size() < 3 || toks[2].text != ":")
                parse_fail(lineno, toks[0].col, "expected 'edge <id>:'");
            const std::string& id = toks[1].text;
            if (!seen_edges.insert(id).second)
                parse_fail(lineno, toks[1].col, "duplicate edge '" + id + "'");
            std::vector<std::string> mem;
            for (std::size_t i = 3; i < toks.size(); ++i) {
                if (toks[i].text == ":")
                    parse_fail(lineno, toks[i].col, "unexpected ':'");
                if (!seen_vertices.count(toks[i].text))
                    parse_fail(lineno, toks[i].col,
                               "edge '" + id + "' mentions undeclared vertex '" + toks[i].text +
                                   "'");
                mem.push_back(toks[i].text);
            }
            edges.emplace_back(id, std::move(mem));
        } else {
            parse_fail(lineno, toks[0].col,
                       "expected 'vertices:' or 'edge <id>:', got '" + toks[0].text + "'");
        }
    }
    if (!have_vertices)
        parse_fail(lineno + 1, 1, "missing vertices line");
    (void)vertices_line;
    return Hypergraph::build(vertices, edges);
}

std::string emit_hypergraph(const Hypergraph& h) {
    std::string out = "vertices:";
    for (const auto& v : h.vertex_names())
        out += " " + v;
    out += "\n";
    for (const auto& e : h.edge_names()) {
        out += "edge " + e + ":";
        for (const auto& v : h.member_names(e))
            out += " " + v;
        out += "\n";
    }
    return out;
}

namespace {

std::string quoted(const std::string& s) {
    return "\"" + s + "\""; // ids are [A-Za-z0-9_]+, nothing to escape
}

} // namespace

std::string emit_incidence_dot(const Hypergraph& h) {
    BipartiteIncidenceGraph g = BipartiteIncidenceGraph::of(h);
    auto cuts = graph_cut_vertices(g);
    auto is_cut = [&](int x) { return std::binary_search(cuts.begin(), cuts.end(), x); };

    std::vector<std::string> vs = h.vertex_names();
    std::sort(vs.begin(), vs.end());
    std::vector<std::string> es = h.edge_names();
    std::sort(es.begin(), es.end());

    std::string out = "graph incidence {\n";
    for (const auto& v : vs) {
        out += "  " + quoted("v_" + v) + " [shape=ellipse, label=" + quoted(v);
        if (is_cut(g.v_node(v)))
            out += ", style=filled";
        out += "];\n";
    }
    for (const auto& e : es) {
        std::string label = e;
        CutEdgeKind k = classify_cut_edge(h, e);
        if (k == CutEdgeKind::Weak)
            label += " (weak cut)";
        else if (k == CutEdgeKind::Strong)
            label += " (strong cut)";
        out += "  " + quoted("e_" + e) + " [shape=box, label=" + quoted(label);
        if (is_cut(g.e_node(e)))
            out += ", style=filled";
        out += "];\n";
    }
    std::vector<std::pair<std::string, std::string>> links;
    for (const auto& e : h.edge_names())
        for (const auto& v : h.member_names(e))
            links.emplace_back(v, e);
    std::sort(links.begin(), links.end());
    for (const auto& [v, e] : links)
        out += "  " + quoted("v_" + v) + " -- " + quoted("e_" + e) + ";\n";
    out += "}\n";
    return out;
}

std::string emit_block_graph_dot(const Hypergraph& h) {
    BlockDecomposition dec = block_graph(h);
    std::string out = "graph block_graph {\n";
    for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
        std::string label = "B" + std::to_string(b + 1) + ":";
        std::vector<std::string> es = dec.blocks[b].child.edge_names();
        std::sort(es.begin(), es.end());
        if (es.empty())
            label += " (no edges)";
        for (const auto& e : es)
            label += " " + e;
        out += "  " + quoted("B" + std::to_string(b + 1)) + " [shape=box, label=" + quoted(label) +
               "];\n";
    }
    for (const auto& v : dec.separating)
        out += "  " + quoted("v_" + v) + " [shape=ellipse, label=" + quoted(v) + "];\n";
    for (const auto& [v, b] : dec.block_graph_links)
        out += "  " + quoted("v_" + v) + " -- " + quoted("B" + std::to_string(b + 1)) + ";\n";
    out += "}\n";
    return out;
}

std::string emit_line_graph_dot(const Hypergraph& h, int level) {
    LineGraph lg = line_graph(h, level);
    std::vector<std::string> es = lg.edges;
    std::sort(es.begin(), es.end());
    std::string out = "graph line_graph {\n";
    for (const auto& e : es)
        out += "  " + quoted("e_" + e) + " [shape=box, label=" + quoted(e) + "];\n";
    for (const auto& [a, b] : lg.links)
        out += "  " + quoted("e_" + a) + " -- " + quoted("e_" + b) + ";\n";
    out += "}\n";
    return out;
}

} // namespace hyperconn
