#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rlfrac {

enum class ErrorCode {
  invalid_argument,
  ml_divergence,
  ml_matrix_failure,
  invalid_jacobi_exponent,
  out_of_range,
  non_integrable_singularity,
  corner_quadrature_unconverged,
  limit_unstable,
  different_generators,
  tail_too_heavy,
  io_error,
};

/// Stable kebab-case name of an error code ("ml-divergence", ...).
std::string_view to_string(ErrorCode code);

/// Library-wide exception. what() is "<code>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rlfrac
