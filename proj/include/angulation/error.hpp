#ifndef ANGULATION_ERROR_HPP
#define ANGULATION_ERROR_HPP

#include <stdexcept>
#include <string>

namespace angulation {

enum class ErrorCode {
    InvalidParams,
    CollinearInput,
    CollinearBoundary,
    CrossingEdges,
    Disconnected,
    MalformedRotationSystem,
    NotDivisible,
    Infeasible,
    Acyclic,
    LayoutOverflow,
    TooLarge,
    NoGraph,
    MissingCoordinates,
    ParseError,
    InternalCheckFailed,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception. `code` selects the failure class; `what()` carries detail.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace angulation

#endif
