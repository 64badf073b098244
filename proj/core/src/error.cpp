#include "rlfrac/error.hpp"

namespace rlfrac {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::ml_divergence: return "ml-divergence";
    case ErrorCode::ml_matrix_failure: return "ml-matrix-failure";
    case ErrorCode::invalid_jacobi_exponent: return "invalid-jacobi-exponent";
    case ErrorCode::out_of_range: return "out-of-range";
    case ErrorCode::non_integrable_singularity: return "non-integrable-singularity";
    case ErrorCode::corner_quadrature_unconverged: return "corner-quadrature-unconverged";
    case ErrorCode::limit_unstable: return "limit-unstable";
    case ErrorCode::different_generators: return "different-generators";
    case ErrorCode::tail_too_heavy: return "tail-too-heavy";
    case ErrorCode::io_error: return "io-error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace rlfrac
