#pragma once

#include <stdexcept>
#include <string>

namespace hyperconn {

enum class Errc {
    EmptyVertexSet,
    DuplicateId,
    UnknownVertexInEdge,
    UnknownVertex,
    UnknownEdge,
    UnknownToken,
    EmptyEdgeCollection,
    LastVertex,
    ResultHasNoVertices,
    EmptySelection,
    IncidenceDisagreement,
    MalformedMatrix,
    MalformedAlternation,
    NotAWalk,
    EndpointMismatch,
    NotClosed,
    ConsecutiveEdgeRepeat,
    BadLevel,
    NotASubgraph,
    NotConnected,
    HasEmptyEdges,
    PreconditionUnmet,
    TooLarge,
    ParseError,
};

const char* errc_name(Errc code);

/// Library-wide error: a violated precondition or malformed input, never an
/// internal inconsistency (those are logic_error).
class HgError : public std::runtime_error {
public:
    HgError(Errc code, const std::string& message);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

} // namespace hyperconn
