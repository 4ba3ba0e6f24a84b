#include "valrank/error.hpp"

namespace valrank {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NegativeValuation: return "NegativeValuation";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::SingularMooreMatrix: return "SingularMooreMatrix";
    case ErrorCode::NotIntegralBasis: return "NotIntegralBasis";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::DepthMismatch: return "DepthMismatch";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::DependentReduction: return "DependentReduction";
    case ErrorCode::SingularTruncatedMoore: return "SingularTruncatedMoore";
    case ErrorCode::NonUnitCoefficient: return "NonUnitCoefficient";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorCode::BackendMismatch: return "BackendMismatch";
    case ErrorCode::TooManyFactors: return "TooManyFactors";
    case ErrorCode::RectangularityViolation: return "RectangularityViolation";
    case ErrorCode::SingularB: return "SingularB";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), message_(message) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace valrank
