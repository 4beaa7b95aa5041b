#pragma once

#include <string>

#include "hyperconn/hypergraph.hpp"

namespace hyperconn {

/// Text format, line oriented:
///
///     # comment, anywhere in a line
///     vertices: a b c
///     edge e1: a b
///     edge e2:
///
/// Exactly one vertices line, first; ids match [A-Za-z0-9_]+; an edge with no
/// members is an empty edge. Parse errors carry "line L, column C".
Hypergraph parse_hypergraph(const std::string& text);

/// Inverse of parse for any hypergraph whose ids fit the grammar: vertices
/// and edges in insertion order, edge members sorted by id.
std::string emit_hypergraph(const Hypergraph& h);

/// DOT renderings; deterministic (nodes and links sorted by id). v-nodes are
/// ellipses, e-nodes boxes; articulation nodes are filled, and e-nodes that
/// name cut edges carry the strong/weak tag in their label.
std::string emit_incidence_dot(const Hypergraph& h);
std::string emit_block_graph_dot(const Hypergraph& h); // connected, no empty edges
std::string emit_line_graph_dot(const Hypergraph& h, int level);

} // namespace hyperconn
