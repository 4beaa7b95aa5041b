#include "hyperconn/error.hpp"

namespace hyperconn {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::EmptyVertexSet: return "EmptyVertexSet";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::UnknownVertexInEdge: return "UnknownVertexInEdge";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::UnknownToken: return "UnknownToken";
    case Errc::EmptyEdgeCollection: return "EmptyEdgeCollection";
    case Errc::LastVertex: return "LastVertex";
    case Errc::ResultHasNoVertices: return "ResultHasNoVertices";
    case Errc::EmptySelection: return "EmptySelection";
    case Errc::IncidenceDisagreement: return "IncidenceDisagreement";
    case Errc::MalformedMatrix: return "MalformedMatrix";
    case Errc::MalformedAlternation: return "MalformedAlternation";
    case Errc::NotAWalk: return "NotAWalk";
    case Errc::EndpointMismatch: return "EndpointMismatch";
    case Errc::NotClosed: return "NotClosed";
    case Errc::ConsecutiveEdgeRepeat: return "ConsecutiveEdgeRepeat";
    case Errc::BadLevel: return "BadLevel";
    case Errc::NotASubgraph: return "NotASubgraph";
    case Errc::NotConnected: return "NotConnected";
    case Errc::HasEmptyEdges: return "HasEmptyEdges";
    case Errc::PreconditionUnmet: return "PreconditionUnmet";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

HgError::HgError(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void raise(Errc code, const std::string& message) {
    throw HgError(code, message);
}

} // namespace hyperconn
