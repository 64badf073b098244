#include <cmath>
#include <sstream>

#include "rlfrac/error.hpp"
#include "rlfrac/frac_calc.hpp"
#include "rlfrac/gamma.hpp"
#include "rlfrac/verifier.hpp"

namespace rlfrac {

namespace {

SingularTrajectory dense_trajectory(const FamilyOracle& fam, const std::vector<double>& grid) {
  std::vector<Matrix> samples;
  samples.reserve(grid.size());
  for (double t : grid) samples.push_back(fam.regular(t));
  return SingularTrajectory(fam.exponent, grid, std::move(samples), fam.regular(0.0), fam.regular);
}

}  // namespace

ResidualReport check_uniqueness(const FamilyOracle& a, const FamilyOracle& b, const FracOrder& order,
                                const std::vector<double>& grid, const CheckOptions& options) {
  if (grid.empty()) throw Error(ErrorCode::invalid_argument, "uniqueness check needs a grid");
  if (a.dim != b.dim) throw Error(ErrorCode::invalid_argument, "families have different dimensions");

  const auto ra = recover_generator(a, order);
  const auto rb = recover_generator(b, order);
  const double scale = std::max(ra.quotient_form.norm(), rb.quotient_form.norm());
  const double gap = (ra.quotient_form - rb.quotient_form).norm() / (scale > 0.0 ? scale : 1.0);
  if (gap > 1e-4) {
    std::ostringstream os;
    os << "recovered generators differ by " << gap << " (relative)";
    throw Error(ErrorCode::different_generators, os.str());
  }

  // Convolution with t^(alpha-2)/Gamma(alpha-1); families with one generator agree after it too.
  const double c = reciprocal_gamma(order.alpha_m1());
  const Eigen::Index n = a.dim;
  const Matrix ck = c * Matrix::Identity(n, n);
  const SingularTrajectory kernel(order.alpha_m2(), grid, std::vector<Matrix>(grid.size(), ck), ck,
                                  [ck](double) { return ck; });
  const auto ta = dense_trajectory(a, grid);
  const auto tb = dense_trajectory(b, grid);

  ResidualReport report;
  report.check_id = "uniqueness";
  report.family = a.label + " vs " + b.label;
  report.tolerance = options.tolerance > 0.0 ? options.tolerance : kUniquenessTolerance;
  report.quadrature_order = options.quad_order;
  for (double t : grid) {
    const Matrix va = a(t);
    const Matrix vb = b(t);
    const double dp = (va - vb).norm();
    const Matrix ca = convolve_singular(kernel, ta, t, options.quad_order);
    const Matrix cb = convolve_singular(kernel, tb, t, options.quad_order);
    const double dc = (ca - cb).norm();
    report.points.push_back({t});
    report.abs_residual = std::max({report.abs_residual, dp, dc});
    report.rel_residual = std::max({report.rel_residual, normalized_residual(dp, va.norm(), vb.norm()),
                                    normalized_residual(dc, ca.norm(), cb.norm())});
  }
  std::ostringstream os;
  os << "generator gap " << gap;
  report.note = os.str();
  report.finalize();
  return report;
}

}  // namespace rlfrac
