// Python bindings for the main operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperconn/blocks.hpp"
#include "hyperconn/connectivity.hpp"
#include "hyperconn/derive.hpp"
#include "hyperconn/incidence_graph.hpp"
#include "hyperconn/oracle.hpp"
#include "hyperconn/textio.hpp"
#include "hyperconn/walks.hpp"

namespace py = pybind11;
using namespace hyperconn;

namespace {

py::dict classify_dict(const WalkClass& c) {
    py::dict d;
    d["walk"] = c.is_walk;
    d["closed"] = c.is_closed();
    d["trail"] = c.is_trail;
    d["strict_trail"] = c.is_strict_trail;
    d["pseudo_path"] = c.is_pseudo_path;
    d["path"] = c.is_path;
    d["closed_class"] = closed_kind_name(c.closed);
    d["class"] = c.summary();
    return d;
}

py::dict blocks_dict(const BlockDecomposition& dec) {
    py::list blocks_list;
    for (const auto& blk : dec.blocks)
        blocks_list.append(blk.child);
    py::list links;
    for (const auto& [v, b] : dec.block_graph_links)
        links.append(py::make_tuple(v, b));
    py::dict d;
    d["blocks"] = blocks_list;
    d["separating"] = dec.separating;
    d["block_graph"] = links;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hypergraph connectivity: duals, incidence graphs, walks, cut edges, blocks, "
              "and an exhaustive verification sweep.";

    py::register_exception<HgError>(m, "HypergraphError");

    py::class_<Hypergraph>(m, "Hypergraph")
        .def_static("build", &Hypergraph::build, py::arg("vertices"), py::arg("edges"),
                    "Validate vertex ids and (edge id, member list) pairs.")
        .def_property_readonly("vertices", &Hypergraph::vertex_names)
        .def_property_readonly("edges", &Hypergraph::edge_names)
        .def("members", &Hypergraph::member_names, py::arg("edge"))
        .def("degree", py::overload_cast<const std::string&>(&Hypergraph::degree, py::const_),
             py::arg("vertex"))
        .def("rank", &Hypergraph::rank)
        .def("corank", &Hypergraph::corank)
        .def("multiplicity", &Hypergraph::multiplicity, py::arg("edge"))
        .def("flag_count", &Hypergraph::flag_count)
        .def("is_simple", &Hypergraph::is_simple)
        .def("is_uniform", &Hypergraph::is_uniform, py::arg("r"))
        .def("is_regular", &Hypergraph::is_regular, py::arg("r"))
        .def("is_trivial", &Hypergraph::is_trivial)
        .def("is_empty", &Hypergraph::is_empty)
        .def("has_empty_edges", &Hypergraph::has_empty_edges)
        .def("has_isolated_vertices", &Hypergraph::has_isolated_vertices)
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
        .def("__repr__", [](const Hypergraph& h) {
            return "Hypergraph(" + std::to_string(h.vertex_count()) + " vertices, " +
                   std::to_string(h.edge_count()) + " edges)";
        });

    m.def("parse", &parse_hypergraph, py::arg("text"), "Parse the line-oriented file format.");
    m.def("emit", &emit_hypergraph, py::arg("hypergraph"), "Render the file format.");

    m.def("dual", &dual);
    m.def("delete_vertex", &delete_vertex);
    m.def("delete_edge", &delete_edge);
    m.def("strong_delete_vertex", &strong_delete_vertex);
    m.def("strong_delete_edge", &strong_delete_edge);
    m.def("induced_subhypergraph",
          [](const Hypergraph& h, const std::vector<std::string>& vs) {
              return induced_subhypergraph(h, vs).child;
          });
    m.def("induced_hypersubgraph_vertices", &induced_hypersubgraph_vertices);
    m.def("induced_hypersubgraph_edges", &induced_hypersubgraph_edges);
    m.def("trace", &trace);
    m.def("union", &hypergraph_union);
    m.def("intersection", &hypergraph_intersection);
    m.def("decompose_check", &decompose_check);
    m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"),
          py::arg("guard_vertices") = 8, py::arg("guard_edges") = 8);

    m.def("omega", &omega);
    m.def("is_connected", &is_connected);
    m.def("components", [](const Hypergraph& h) {
        ComponentPartition part = components(h);
        py::dict d;
        d["classes"] = part.classes;
        d["edge_assignment"] = part.edge_assignment;
        d["stray_empty_edges"] = part.stray_empty_edges;
        return d;
    });

    m.def("classify_cut_edge", [](const Hypergraph& h, const std::string& e) {
        return std::string(cut_edge_kind_name(classify_cut_edge(h, e)));
    });
    m.def("cut_edges", [](const Hypergraph& h) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [e, kind] : cut_edges(h))
            out.emplace_back(e, cut_edge_kind_name(kind));
        return out;
    });
    m.def("is_cut_vertex", &is_cut_vertex);
    m.def("cut_vertices", &cut_vertices);
    m.def("is_separating_vertex", &is_separating_vertex);
    m.def("separating_vertices", &separating_vertices);
    m.def("brute_separating", &brute_separating, py::arg("hypergraph"), py::arg("vertex"),
          py::arg("max_edges_guard") = 12);

    m.def("is_nonseparable", &is_nonseparable);
    m.def("blocks", [](const Hypergraph& h) { return blocks_dict(blocks(h)); });
    m.def("block_graph", [](const Hypergraph& h) { return blocks_dict(block_graph(h)); });
    m.def("weak_cut_edges_in_nonseparable", &weak_cut_edges_in_nonseparable);

    m.def("classify_walk", [](const Hypergraph& h, const std::string& walk) {
        return classify_dict(classify(h, WalkSeq::parse(walk)));
    });
    m.def("find_path", [](const Hypergraph& h, const std::string& u, const std::string& v)
              -> std::optional<std::vector<std::string>> {
        auto p = find_path(h, u, v);
        if (!p)
            return std::nullopt;
        return p->tokens;
    });
    m.def("dual_closed_walk", [](const Hypergraph& h, const std::string& walk) {
        return dual_closed_walk(h, WalkSeq::parse(walk)).tokens;
    });
    m.def("enumerate_cycles", [](const Hypergraph& h, int max_len) {
        std::vector<std::vector<std::string>> out;
        for (const auto& c : enumerate_cycles(h, max_len))
            out.push_back(c.tokens);
        return out;
    }, py::arg("hypergraph"), py::arg("max_len") = 0);

    m.def("line_graph", [](const Hypergraph& h, int level) {
        return line_graph(h, level).links;
    }, py::arg("hypergraph"), py::arg("level") = 1);
    m.def("incidence_dot", &emit_incidence_dot);
    m.def("block_graph_dot", &emit_block_graph_dot);
    m.def("line_graph_dot", &emit_line_graph_dot);

    m.def("law_names", &verification_law_names);
    m.def("verify",
          [](int max_vertices, int max_edges, bool allow_empty_edges,
             const std::vector<std::string>& laws, int jobs, bool mutate_strong_cut) {
              EnumSpace space{max_vertices, max_edges, allow_empty_edges};
              VerifyOptions opts;
              opts.laws = laws;
              opts.jobs = jobs;
              opts.mutate_strong_cut = mutate_strong_cut;
              VerificationReport report = verify(space, opts);
              py::list law_list;
              for (const auto& law : report.laws) {
                  py::dict d;
                  d["law"] = law.law;
                  d["checked"] = law.checked;
                  d["failures"] = law.failures;
                  d["counterexample"] = law.first_counterexample;
                  law_list.append(d);
              }
              py::dict out;
              out["instances"] = report.instances;
              out["laws"] = law_list;
              out["ok"] = report.ok();
              return out;
          },
          py::arg("max_vertices") = 3, py::arg("max_edges") = 3,
          py::arg("allow_empty_edges") = true, py::arg("laws") = std::vector<std::string>{},
          py::arg("jobs") = 1, py::arg("mutate_strong_cut") = false);
}
