#pragma once

#include <stdexcept>
#include <string>

namespace oforge {

enum class ErrorCode {
    // graph validation
    EulerViolation,
    NonCoherentOrientation,
    NotThreeConnected,
    DegenerateFace,
    InternalInvariantViolation,
    // spanning trees
    Overflow,
    LimitExceeded,
    NotAnEdge,
    InfeasibleZ,
    // embedding
    NonConvexBase,
    CollinearBase,
    SingularSystem,
    ResidualTooLarge,
    // lifting
    ClosureViolation,
    NonPositiveHeights,
    BaseNotPlanar,
    VertexNotOnFace,
    // shaping
    DegenerateAfterScale,
    SearchExhausted,
    IterationCapExceeded,
    // unfolding
    NotSpanningTree,
    NumericalDegeneracy,
    OverlapPresent,
    NoTransition,
    // pipeline
    NoCandidateCorner,
    AngleTooLarge,
    // io
    ParseError,
    ValidationError,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace oforge
