#pragma once

#include <stdexcept>
#include <string>

namespace dpfib {

/// Failure categories surfaced by the library. The CLI maps Internal and
/// Overflow to exit code 2, everything else to exit code 1.
enum class ErrorCode {
  InvalidRank,
  MixedBundles,
  NotACurveClass,
  ProductCase,
  NotRealizable,
  NotApplicable,
  InvalidArgument,
  InvalidSystem,
  Undetermined,
  Overflow,
  Internal,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::MixedBundles: return "MixedBundles";
    case ErrorCode::NotACurveClass: return "NotACurveClass";
    case ErrorCode::ProductCase: return "ProductCase";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidSystem: return "InvalidSystem";
    case ErrorCode::Undetermined: return "Undetermined";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

  /// True for conditions caused by caller input (bad parameters, tuples the
  /// classification rejects); false for internal/arithmetic failures.
  bool is_usage_error() const {
    return code_ != ErrorCode::Internal && code_ != ErrorCode::Overflow;
  }

 private:
  ErrorCode code_;
};

}  // namespace dpfib
