#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitlr {

enum class ErrorKind {
    InvalidPartition,
    InvalidArgument,
    UnequalWeight,
    NegativeInput,
    ShapeMismatch,
    TooFewVariables,
    WeightMismatch,
    EmptyFiber,
    TooLong,
    NotNilpotent,
    BudgetExceeded,
    NonIntegralInterpolation,
    InconsistentInterpolation,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` tells callers what failed.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace orbitlr
