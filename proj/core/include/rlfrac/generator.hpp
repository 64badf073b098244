#pragma once

#include <optional>

#include "rlfrac/mittag_leffler.hpp"
#include "rlfrac/types.hpp"

namespace rlfrac {

/// A = V diag(eigenvalues) V^-1.
struct SpectralCache {
  Vector eigenvalues;
  Matrix vectors;
  Matrix inverse;
  double condition = 1.0;  // 2-norm condition number of V
};

/// Dense square generator with an eigendecomposition computed once at
/// construction. The cache is kept only when it reconstructs A to within
/// 1e-10 * ||A||_F; defective matrices therefore fall back to series paths.
class Generator {
 public:
  enum class Spectral { compute, skip };

  explicit Generator(Matrix entries, Spectral spectral = Spectral::compute);

  static Generator real(const Eigen::MatrixXd& entries, Spectral spectral = Spectral::compute);
  static Generator zero(Eigen::Index dim);

  Eigen::Index dim() const noexcept { return entries_.rows(); }
  const Matrix& entries() const noexcept { return entries_; }
  const std::optional<SpectralCache>& spectral() const noexcept { return spectral_; }
  double norm() const noexcept { return norm_; }
  double spectral_radius() const noexcept { return spectral_radius_; }

 private:
  Matrix entries_;
  std::optional<SpectralCache> spectral_;
  double norm_ = 0.0;
  double spectral_radius_ = 0.0;
};

/// Spectral path is used only when the eigenvector condition number is at most this.
inline constexpr double kSpectralConditionLimit = 1e8;

/// E_{alpha,beta}(scale * A). Spectral route when the cache is present and
/// well conditioned; otherwise the matrix power series in long double with
/// error <= tol * (1 + ||result||). Throws Error(ml_matrix_failure) when the
/// series cannot meet that bound.
Matrix ml_matrix(const MittagLeffler& kernel, const Generator& gen, Complex scale = 1.0);

Matrix ml_matrix(MLParams params, const Generator& gen, double tol = kDefaultMLTolerance);

/// Forced series route, independent of any spectral cache.
Matrix ml_matrix_series(const MittagLeffler& kernel, const Matrix& argument);

}  // namespace rlfrac
