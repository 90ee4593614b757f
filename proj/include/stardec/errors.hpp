#ifndef STARDEC_ERRORS_HPP
#define STARDEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stardec {

enum class ErrorKind {
    NotAPermutation,
    HasLoop,
    HasTwoCycle,
    NotAnticlockwise,
    TooSmall,
    DegenerateAngle,
    EdgeNotPresent,
    DiagonalNotLinkable,
    NotAStarDecomposition,
    NotIndependent,
    OddTotal,
    NotLinkablePair,
    PairsEqual,
    NotMaximal,
    DiagonalNotInD,
    ResidualNotCyclicPolygon,
    HypothesisViolated,
    NotMinimalEdge,
    KeyNotFound,
    InvalidParameters,
    SyntaxError,
    ValidationError,
    Internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace stardec

#endif
