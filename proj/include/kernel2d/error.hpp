#pragma once

#include <stdexcept>
#include <string>

namespace kernel2d {

enum class ErrorKind {
    EmptyInput,
    DegenerateHull,
    DegenerateInput,
    InvalidEps,
    ArcTooLong,
    NotCoverable,
    NotStarShaped,
    NoBlockingSet,
    AtOrigin,
    ThroughOrigin,
    PointInsideInner,
    NotContained,
    TooLarge,
    Parse,
    Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Relative eps in (0,1); throws InvalidEps otherwise.
void require_relative_eps(double eps);

}  // namespace kernel2d
