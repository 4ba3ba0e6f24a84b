#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace valrank {

/// Machine-readable failure categories shared by the library, the CLI and the
/// Python bindings.
enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NegativeValuation,
  ZeroMatrix,
  NotPrime,
  SingularMooreMatrix,
  NotIntegralBasis,
  SingularMatrix,
  RingMismatch,
  DepthMismatch,
  DepthExceeded,
  NotMonic,
  DependentReduction,
  SingularTruncatedMoore,
  NonUnitCoefficient,
  BudgetExceeded,
  MonotonicityViolation,
  BackendMismatch,
  TooManyFactors,
  RectangularityViolation,
  SingularB,
  TheoremViolation,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace valrank
