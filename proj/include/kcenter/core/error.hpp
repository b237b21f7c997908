#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kcenter {

/// Failure categories surfaced to callers and mapped to CLI exit codes.
enum class ErrorCode {
  InvalidArgument,
  ParseError,
  InvalidInstance,
  BudgetExceeded,
  Infeasible,
  EmptyRegion,
  InvalidCover,
  NoCertificate,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::InvalidInstance: return "INVALID_INSTANCE";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::Infeasible: return "INFEASIBLE";
    case ErrorCode::EmptyRegion: return "EMPTY_REGION";
    case ErrorCode::InvalidCover: return "INVALID_COVER";
    case ErrorCode::NoCertificate: return "NO_CERTIFICATE";
  }
  return "UNKNOWN";
}

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

}  // namespace kcenter
