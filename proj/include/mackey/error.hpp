#pragma once

#include <stdexcept>
#include <string>

namespace mackey {

enum class ErrorCode {
  OrderCapExceeded,
  InvalidPermutation,
  NotASubgroup,
  NotNested,
  DimensionMismatch,
  InvalidAlgebra,
  ActionViolation,
  GroupMismatch,
  SupportViolation,
  ContextMismatch,
  IncompatibleRepSystems,
  CounterexampleFound,
  FamilyNotClosed,
  IntegralityViolation,
  NoSolution,
  PreconditionViolated,
  InputError,
  IoError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::ActionViolation: return "ActionViolation";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::IncompatibleRepSystems: return "IncompatibleRepSystems";
    case ErrorCode::CounterexampleFound: return "CounterexampleFound";
    case ErrorCode::FamilyNotClosed: return "FamilyNotClosed";
    case ErrorCode::IntegralityViolation: return "IntegralityViolation";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InputError: return "InputError";
    case ErrorCode::IoError: return "IoError";
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

}  // namespace mackey
