#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace omegafn {

enum class ErrorCode {
  division_by_zero_constant_term,
  nonzero_constant_term,
  inner_constant_term_nonzero,
  bad_constant_term,
  not_normalized,
  bad_index,
  unknown_id,
  pole_at_point,
  zero_of_f,
  evaluation_failure,
  domain_error,
  unsupported_shape,
  unknown_target,
  parse_error,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code identifies the contract
/// that was violated; `value()` carries the offending complex number when
/// one exists (a bad constant term, a pole location, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::complex<double>> value = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<std::complex<double>>& value() const noexcept { return value_; }

 private:
  ErrorCode code_;
  std::optional<std::complex<double>> value_;
};

}  // namespace omegafn
