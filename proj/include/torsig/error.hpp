#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torsig {

/// Failure categories surfaced by the library. The string form is stable
/// and appears in CLI error messages.
enum class ErrorCode {
  ZeroVector,
  NotSquare,
  DimensionMismatch,
  NotABasis,
  Unbounded,
  Empty,
  NotSimple,
  NotSimplicial,
  NotComplete,
  WrongDegree,
  OddDimension,
  StepLimit,
  InvalidInput,
  UnknownPreset,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace torsig
