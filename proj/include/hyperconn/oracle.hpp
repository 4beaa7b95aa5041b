#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperconn/hypergraph.hpp"
#include "hyperconn/walks.hpp"

namespace hyperconn {

/// Exhaustive labelled enumeration space: for every n <= max_vertices and
/// m <= max_edges, every mapping of m labelled edges to subsets of n labelled
/// vertices (equivalently, every n x m 0/1 matrix). Vertices are named
/// v1..vn, edges e1..em. With allow_empty_edges false, all-zero columns are
/// skipped at the source.
struct EnumSpace {
    int max_vertices = 3;
    int max_edges = 3;
    bool allow_empty_edges = true;

    long long size() const;
    Hypergraph instance_at(long long ordinal) const; // deterministic, matrix-lexicographic
};

/// Calls fn on every instance in order.
void enumerate(const EnumSpace& space, const std::function<void(const Hypergraph&)>& fn);

/// All cycles of length 2..max_len, one canonical representative per
/// rotation/reflection class (rotate to the smallest starting vertex, then
/// take the lexicographically smaller direction). max_len 0 means min(n, m),
/// which no cycle can exceed.
std::vector<WalkSeq> enumerate_cycles(const Hypergraph& h, int max_len = 0);

/// x and y may be vertex or edge ids (vertices win a name clash); true when
/// some cycle carries both among its anchors and edges.
bool on_common_cycle(const Hypergraph& h, const std::string& x, const std::string& y);

enum class ClosedTrailKind { StrictClosedTrail, PseudoCycle };

/// Canonical representatives of all closed strict trails (edges pairwise
/// distinct, so length caps at m) or pseudo cycles (round vertices pairwise
/// distinct, so length caps at n).
std::vector<WalkSeq> enumerate_closed_trails(const Hypergraph& h, ClosedTrailKind kind,
                                             int max_len = 0);

/// Definition-level separating test: tries every split of the edges into two
/// non-empty parts whose vertex sets meet exactly in v, both parts connected.
/// Connected input without empty edges only; refuses more than guard edges.
bool brute_separating(const Hypergraph& h, const std::string& v, int max_edges_guard = 12);

/// Brute-force isomorphism over vertex bijections with degree pruning.
bool are_isomorphic(const Hypergraph& a, const Hypergraph& b, int guard_vertices = 8,
                    int guard_edges = 8);

struct LawResult {
    std::string law;
    long long checked = 0;  // instances meeting the law's hypotheses
    long long failures = 0;
    std::string first_counterexample; // description plus hypergraph file body
};

struct VerificationReport {
    EnumSpace space;
    long long instances = 0; // always the full enumeration-space size
    std::vector<LawResult> laws;
    bool ok() const;
};

/// Names of all verification laws, in report order.
std::vector<std::string> verification_law_names();

struct VerifyOptions {
    std::vector<std::string> laws; // empty means all
    int jobs = 1;
    bool mutate_strong_cut = false;     // sabotage hook: report every cut edge as strong
    bool dedup_isomorphic = false;      // one representative per isomorphism class
    long long instance_guard = 500000;  // refuse larger spaces loudly
};

/// Runs every selected law over every instance of the space that satisfies
/// the law's hypotheses; counts checks per law and keeps the first
/// counterexample of each failing law.
VerificationReport verify(const EnumSpace& space, const VerifyOptions& options = {});

} // namespace hyperconn
