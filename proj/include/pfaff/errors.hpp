#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pfaff {

enum class ErrorCode {
  Parse,
  InvalidInput,
  FieldMismatch,
  DegreeMismatch,
  IndexOutOfRange,
  SizeLimit,
  NotDivisible,
  NotARepresentation,
  DegenerateRep,
  NonlinearQuotient,
  SampleNotOnCurve,
  PointNotOnCurve,
  MissingParameter,
  InvalidGroupElement,
  EliminationFailed,
  WrongCount,
  NoSolutionFound,
  BudgetExceeded,
  InsufficientSamples,
};

std::string_view code_name(ErrorCode code);

/// All library failures are reported through this one exception type; the
/// code is what callers (and the CLI exit status) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pfaff
