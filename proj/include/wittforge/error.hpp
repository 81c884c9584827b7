#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wittforge {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  InvalidField,
  IrreducibilityUnverified,
  FactorizationUnsupported,
  DegenerateForm,
  DegenerateTraceForm,
  UnsupportedField,
  Inconclusive,
  RingMismatch,
  NotAField,
  NotHomogeneous,
  GradingInconsistent,
  NotAChainMap,
  NotRegularSequence,
  BoundsExceeded,
  ParityError,
  InvalidArgument,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::IrreducibilityUnverified: return "IrreducibilityUnverified";
    case ErrorCode::FactorizationUnsupported: return "FactorizationUnsupported";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::DegenerateTraceForm: return "DegenerateTraceForm";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotAField: return "NotAField";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::GradingInconsistent: return "GradingInconsistent";
    case ErrorCode::NotAChainMap: return "NotAChainMap";
    case ErrorCode::NotRegularSequence: return "NotRegularSequence";
    case ErrorCode::BoundsExceeded: return "BoundsExceeded";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
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

}  // namespace wittforge
