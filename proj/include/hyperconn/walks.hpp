#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperconn/derive.hpp"
#include "hyperconn/hypergraph.hpp"
#include "hyperconn/incidence_graph.hpp"

namespace hyperconn {

/// An alternating token sequence v0 e1 v1 ... ek vk, k >= 0. Tokens at even
/// positions name vertices, at odd positions edges. Construction does not
/// validate anything; classify() does.
struct WalkSeq {
    std::vector<std::string> tokens;

    static WalkSeq parse(const std::string& text); // whitespace-separated tokens
    std::string text() const;

    /// Number of edge steps, assuming odd token count.
    int length() const { return static_cast<int>(tokens.size()) / 2; }
    std::string vertex_at(int i) const { return tokens[2 * std::size_t(i)]; }
    std::string edge_at(int i) const { return tokens[2 * std::size_t(i) - 1]; } // 1-based step

    bool operator==(const WalkSeq&) const = default;
};

enum class ClosedKind {
    None,             // not a walk at all
    Open,             // a walk, but not closed
    ClosedWalk,       // ends meet, length >= 2
    ClosedTrail,      // additionally no repeated anchor flag
    ClosedStrictTrail,// additionally no repeated edge
    PseudoCycle,      // closed trail with distinct round vertices, edges may repeat
    Cycle,            // distinct round vertices and distinct edges
};

const char* closed_kind_name(ClosedKind k);

/// The walk taxonomy. A trail repeats no anchor flag; a strict trail repeats
/// no edge; a pseudo path repeats neither flags nor vertices; a path repeats
/// neither vertices nor edges. The open notions are false for closed walks,
/// whose classification lives in `closed`.
struct WalkClass {
    bool is_walk = false;
    bool is_trail = false;
    bool is_strict_trail = false;
    bool is_pseudo_path = false;
    bool is_path = false;
    ClosedKind closed = ClosedKind::None;

    bool is_closed() const { return closed >= ClosedKind::ClosedWalk; }
    bool is_closed_trail() const { return closed >= ClosedKind::ClosedTrail; }
    bool is_closed_strict_trail() const {
        return closed == ClosedKind::ClosedStrictTrail || closed == ClosedKind::Cycle;
    }
    bool is_pseudo_cycle() const {
        return closed == ClosedKind::PseudoCycle || closed == ClosedKind::Cycle;
    }
    bool is_cycle() const { return closed == ClosedKind::Cycle; }

    /// The most specific name: "path", "pseudo cycle", "not a walk", ...
    std::string summary() const;
};

/// Full lattice evaluation of an arbitrary token sequence. Sequences with an
/// even token count are malformed; tokens must exist on their side.
WalkClass classify(const Hypergraph& h, const WalkSeq& w);

/// Anchors are the sequence vertices; floaters are vertices inside the walk's
/// edges that are not anchors; edge ids are listed once per traversal.
struct WalkAnatomy {
    std::vector<std::string> anchors;  // sorted
    std::vector<std::string> floaters; // sorted
    std::vector<std::string> edge_ids; // sorted, repeated per traversal
};

WalkAnatomy anatomy(const Hypergraph& h, const WalkSeq& w);

/// The walk's edges in full, over anchors plus floaters.
Hypergraph associated_hypersubgraph(const Hypergraph& h, const WalkSeq& w);
/// The walk's edges cut down to the anchors.
SubhypergraphWitness associated_subhypergraph(const Hypergraph& h, const WalkSeq& w);

/// Splices two walks sharing the junction vertex once.
WalkSeq concatenate(const WalkSeq& a, const WalkSeq& b);

/// The same tokens read as nodes of the incidence graph.
std::vector<int> to_incidence_walk(const BipartiteIncidenceGraph& g, const WalkSeq& w);

/// Plain graph-walk facts about a node sequence, in the form needed to mirror
/// the hypergraph taxonomy on the incidence graph.
struct GraphWalkClass {
    bool is_walk = false;
    bool is_closed = false; // ends equal, at least two steps
    bool is_trail = false;  // no repeated graph edge
    bool is_path = false;   // all nodes distinct
    bool is_cycle = false;  // closed trail, no other node repetition
    bool no_equal_consecutive_v = false; // positions 0,2,4,... pairwise-adjacent distinct
    bool each_e_at_most_once = false;
    bool each_v_at_most_once_open = false;   // every position counted
    bool each_v_at_most_once_closed = false; // first and last counted once
};

GraphWalkClass classify_incidence(const BipartiteIncidenceGraph& g, const std::vector<int>& nodes);

/// Rewrites a closed walk as a closed walk of the dual, swapping the roles of
/// vertices and edges. Requires cyclically distinct consecutive edges.
/// Closed trails and cycles keep their class; strict closed trails and pseudo
/// cycles trade places.
WalkSeq dual_closed_walk(const Hypergraph& h, const WalkSeq& w);

/// A vertex- and edge-distinct walk between the endpoints when they are
/// connected, found by breadth-first search on the incidence graph.
std::optional<WalkSeq> find_path(const Hypergraph& h, const std::string& u, const std::string& v);

} // namespace hyperconn
