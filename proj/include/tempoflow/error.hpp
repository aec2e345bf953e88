#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tempoflow {

enum class ErrorCode {
    // input validation
    ParseError,
    InvalidArgument,
    DuplicateNode,
    DuplicateEdge,
    SelfLoop,
    SourceEqualsSink,
    UnknownNode,
    NegativeValue,
    InvalidPieces,
    InvalidIntervalSet,
    TooManyDistinctLengths,
    InfeasibleParameters,
    NodeNotInC,
    ShiftOutOfRange,
    // flow-over-time feasibility
    CapacityViolated,
    NegativeHolding,
    NonZeroNetFlow,
    // resource limits
    ArithmeticOverflow,
    BudgetExceeded,
    // self-checks that only fire on an implementation bug
    BoundViolation,
    DualityViolation,
    NotMonotone,
    CostIncreased,
    NotAMinCut,
    InvariantViolation,
};

enum class ErrorCategory { Validation, Budget, Internal };

constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::SourceEqualsSink: return "SourceEqualsSink";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::InvalidPieces: return "InvalidPieces";
    case ErrorCode::InvalidIntervalSet: return "InvalidIntervalSet";
    case ErrorCode::TooManyDistinctLengths: return "TooManyDistinctLengths";
    case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::NodeNotInC: return "NodeNotInC";
    case ErrorCode::ShiftOutOfRange: return "ShiftOutOfRange";
    case ErrorCode::CapacityViolated: return "CapacityViolated";
    case ErrorCode::NegativeHolding: return "NegativeHolding";
    case ErrorCode::NonZeroNetFlow: return "NonZeroNetFlow";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::DualityViolation: return "DualityViolation";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::CostIncreased: return "CostIncreased";
    case ErrorCode::NotAMinCut: return "NotAMinCut";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

constexpr ErrorCategory category(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::BudgetExceeded:
        return ErrorCategory::Budget;
    case ErrorCode::BoundViolation:
    case ErrorCode::DualityViolation:
    case ErrorCode::NotMonotone:
    case ErrorCode::CostIncreased:
    case ErrorCode::NotAMinCut:
    case ErrorCode::InvariantViolation:
        return ErrorCategory::Internal;
    default:
        return ErrorCategory::Validation;
    }
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace tempoflow
