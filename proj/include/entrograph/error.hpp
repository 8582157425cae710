#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace entrograph {

enum class ErrorCode {
  DuplicateEdge,
  SelfLoop,
  NonPositiveWeight,
  MissingEdgeOnDelete,
  EdgeAlreadyExists,
  ParseError,
  InvariantViolation,
  InvalidParameter,
  ConvergenceFailure,
  EmptyGraph,
  DivisionByZero,
  DimensionMismatch,
  NegativeDegree,
  ZeroVolumeSnapshot,
  GraphComplete,
  InvalidBudget,
  TooFewSnapshots,
  KTooLarge,
  BudgetInfeasible,
  SizeCapExceeded,
  InternalConsistency,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::MissingEdgeOnDelete: return "MissingEdgeOnDelete";
    case ErrorCode::EdgeAlreadyExists: return "EdgeAlreadyExists";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeDegree: return "NegativeDegree";
    case ErrorCode::ZeroVolumeSnapshot: return "ZeroVolumeSnapshot";
    case ErrorCode::GraphComplete: return "GraphComplete";
    case ErrorCode::InvalidBudget: return "InvalidBudget";
    case ErrorCode::TooFewSnapshots: return "TooFewSnapshots";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::BudgetInfeasible: return "BudgetInfeasible";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace entrograph
