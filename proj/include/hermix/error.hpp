#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hermix {

enum class ErrorCode {
    DuplicateEdge,
    SelfLoop,
    BadVertexId,
    SameVertex,
    NotUnicyclic,
    ContextMismatch,
    DivisionByZero,
    NotBipartite,
    NotPerfect,
    NotAWalk,
    DimensionTooLarge,
    NumericallySingular,
    SingularMatrix,
    NotInClassH,
    HasArcs,
    Disconnected,
    OddCycleParity,
    NotTwoPegs,
    NoDoublePath,
    ParseError,
    GenerationFailed,
    InvalidArgument,
    InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every error except InvariantViolation reports a violated precondition.
bool is_precondition(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hermix
