#include "hermix/error.hpp"

namespace hermix {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::BadVertexId: return "BadVertexId";
        case ErrorCode::SameVertex: return "SameVertex";
        case ErrorCode::NotUnicyclic: return "NotUnicyclic";
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::NotPerfect: return "NotPerfect";
        case ErrorCode::NotAWalk: return "NotAWalk";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::NumericallySingular: return "NumericallySingular";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NotInClassH: return "NotInClassH";
        case ErrorCode::HasArcs: return "HasArcs";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::OddCycleParity: return "OddCycleParity";
        case ErrorCode::NotTwoPegs: return "NotTwoPegs";
        case ErrorCode::NoDoublePath: return "NoDoublePath";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::GenerationFailed: return "GenerationFailed";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

bool is_precondition(ErrorCode code) noexcept {
    return code != ErrorCode::InvariantViolation;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace hermix
