#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "rlfrac/types.hpp"

namespace rlfrac {

/// Function f(t) = t^p G(t) on (0, T] with G continuous on [0, T].
///
/// G is known through samples on a strictly increasing positive grid plus the
/// limit g0 = G(0+). Between samples it is reconstructed by a monotone
/// (Fritsch-Carlson) cubic, applied separately to the real and imaginary part
/// of every entry. A trajectory sampled from a family with a closed-form
/// evaluator may carry that evaluator; integrals then use it instead of the
/// interpolant.
class SingularTrajectory {
 public:
  SingularTrajectory(double exponent, std::vector<double> grid, std::vector<Matrix> samples,
                     Matrix g0, RegularFn dense = {});

  double exponent() const noexcept { return exponent_; }
  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<Matrix>& samples() const noexcept { return samples_; }
  const Matrix& g0() const noexcept { return g0_; }
  double horizon() const noexcept { return grid_.back(); }
  Eigen::Index rows() const noexcept { return g0_.rows(); }
  Eigen::Index cols() const noexcept { return g0_.cols(); }
  bool has_dense() const noexcept { return static_cast<bool>(dense_); }

  /// G(t) for t in [0, horizon]. Throws Error(out_of_range) outside.
  Matrix regular(double t) const;

  /// Interpolated G(t), ignoring any dense evaluator.
  Matrix interpolate(double t) const;

  /// f(t) = t^p G(t) for t in (0, horizon].
  Matrix value(double t) const;

  /// Largest deviation of an interior sample from the linear interpolant of
  /// its neighbours, relative to 1 + max sample norm.
  double continuity_defect() const;

  /// Throws Error(invalid_argument) if continuity_defect() exceeds bound.
  void require_continuity(double bound) const;

  /// Regular part as a callable (dense evaluator when present).
  RegularFn regular_fn() const;

 private:
  double exponent_;
  std::vector<double> grid_;
  std::vector<Matrix> samples_;
  Matrix g0_;
  RegularFn dense_;
  // Knots are {0} + grid; slopes are the monotone cubic derivatives there.
  std::vector<double> knots_;
  std::vector<Matrix> knot_values_;
  std::vector<Matrix> slopes_;
};

/// CSV with header `t,<entries>` holding f(t) = t^p G(t); entries are `u_i`
/// for vectors and `T_i_j` for matrices, split into `_re`/`_im` columns when
/// any sample is complex. The JSON sidecar stores exponent, shape and g0.
void write_trajectory(const SingularTrajectory& traj, const std::filesystem::path& csv_path,
                      const std::filesystem::path& json_path);

SingularTrajectory read_trajectory(const std::filesystem::path& csv_path,
                                   const std::filesystem::path& json_path);

}  // namespace rlfrac
