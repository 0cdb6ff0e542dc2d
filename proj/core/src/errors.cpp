#include "omegafn/errors.hpp"

namespace omegafn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::division_by_zero_constant_term: return "DivisionByZeroConstantTerm";
    case ErrorCode::nonzero_constant_term: return "NonzeroConstantTerm";
    case ErrorCode::inner_constant_term_nonzero: return "InnerConstantTermNonzero";
    case ErrorCode::bad_constant_term: return "BadConstantTerm";
    case ErrorCode::not_normalized: return "NotNormalized";
    case ErrorCode::bad_index: return "BadIndex";
    case ErrorCode::unknown_id: return "UnknownId";
    case ErrorCode::pole_at_point: return "PoleAtPoint";
    case ErrorCode::zero_of_f: return "ZeroOfF";
    case ErrorCode::evaluation_failure: return "EvaluationFailure";
    case ErrorCode::domain_error: return "DomainError";
    case ErrorCode::unsupported_shape: return "UnsupportedShape";
    case ErrorCode::unknown_target: return "UnknownTarget";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::complex<double>> value)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      value_(value) {}

}  // namespace omegafn
