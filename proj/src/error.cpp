#include "orbitlr/error.hpp"

namespace orbitlr {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnequalWeight: return "UnequalWeight";
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::TooFewVariables: return "TooFewVariables";
    case ErrorKind::WeightMismatch: return "WeightMismatch";
    case ErrorKind::EmptyFiber: return "EmptyFiber";
    case ErrorKind::TooLong: return "TooLong";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NonIntegralInterpolation: return "NonIntegralInterpolation";
    case ErrorKind::InconsistentInterpolation: return "InconsistentInterpolation";
    }
    return "Unknown";
}

}  // namespace orbitlr
