#include "rlfrac/frac_calc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rlfrac/error.hpp"
#include "rlfrac/gamma.hpp"
#include "rlfrac/jacobi.hpp"

namespace rlfrac {

namespace {

void require_integrable(double p) {
  if (!(p > -1.0)) {
    throw Error(ErrorCode::non_integrable_singularity,
                "singular exponent " + std::to_string(p) + " is not integrable at 0");
  }
}

void require_in_range(const SingularTrajectory& f, double t) {
  if (!(t > 0.0) || t > f.horizon()) {
    throw Error(ErrorCode::out_of_range,
                "time " + std::to_string(t) + " outside (0, " + std::to_string(f.horizon()) + "]");
  }
}

double local_spacing(const std::vector<double>& grid, double t) {
  auto it = std::lower_bound(grid.begin(), grid.end(), t);
  double h = std::numeric_limits<double>::infinity();
  if (it != grid.end()) {
    if (*it > t) h = std::min(h, *it - t);
    if (it + 1 != grid.end()) h = std::min(h, *(it + 1) - *it);
  }
  if (it != grid.begin()) h = std::min(h, t - *(it - 1));
  return h;
}

}  // namespace

Matrix jacobi_integral(const RegularFn& g, double p, double order, double t, int n) {
  require_integrable(p);
  if (!(order > 0.0)) throw Error(ErrorCode::invalid_argument, "integration order must be positive");
  if (!(t > 0.0)) throw Error(ErrorCode::out_of_range, "fractional integral needs t > 0");
  const auto rule = cached_jacobi_rule(n, order - 1.0, p);
  const auto mapped = map_rule(*rule, 0.0, t);
  return reciprocal_gamma(order) * integrate(mapped, g);
}

Matrix frac_integral(const SingularTrajectory& f, double alpha_int, double t, int n) {
  if (n < 4) throw Error(ErrorCode::invalid_argument, "quadrature order must be at least 4");
  if (!(alpha_int > 0.0)) throw Error(ErrorCode::invalid_argument, "integration order must be positive");
  require_integrable(f.exponent());
  require_in_range(f, t);
  return jacobi_integral([&f](double s) { return f.regular(s); }, f.exponent(), alpha_int, t, n);
}

Matrix frac_derivative(const SingularTrajectory& f, double alpha_d, double t,
                       const DerivativeOptions& options) {
  if (!(alpha_d > 1.0 && alpha_d < 2.0)) {
    throw Error(ErrorCode::invalid_argument, "derivative order must lie in (1, 2)");
  }
  require_in_range(f, t);
  const double h = options.step.value_or(std::min(local_spacing(f.grid(), t), t / 8.0));
  if (!(h > 0.0) || !(t - h > 0.0) || t + h > f.horizon()) {
    throw Error(ErrorCode::out_of_range, "derivative stencil around t=" + std::to_string(t) +
                                             " with h=" + std::to_string(h) + " leaves the grid");
  }
  const double order = 2.0 - alpha_d;
  auto J = [&](double s) { return frac_integral(f, order, s, options.quad_order); };
  const Matrix center = J(t);
  auto second_difference = [&](double step) -> Matrix {
    return (J(t + step) - 2.0 * center + J(t - step)) / (step * step);
  };
  const Matrix coarse = second_difference(h);
  const Matrix fine = second_difference(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

Matrix convolve_singular(const SingularTrajectory& f, const SingularTrajectory& g, double t, int n) {
  if (n < 4) throw Error(ErrorCode::invalid_argument, "quadrature order must be at least 4");
  require_integrable(f.exponent());
  require_integrable(g.exponent());
  require_in_range(f, t);
  require_in_range(g, t);
  if (f.cols() != g.rows()) {
    throw Error(ErrorCode::invalid_argument, "convolution operands have incompatible shapes");
  }
  const double half = 0.5 * t;
  // [0, t/2]: g carries s^pg, f(t - s) is smooth.
  const auto lower = map_rule(*cached_jacobi_rule(n, 0.0, g.exponent()), 0.0, half);
  const Matrix left = integrate(lower, [&](double s) { return Matrix(f.value(t - s) * g.regular(s)); });
  // [t/2, t]: f(t - s) carries (t - s)^pf, g(s) is smooth.
  const auto upper = map_rule(*cached_jacobi_rule(n, f.exponent(), 0.0), half, t);
  const Matrix right =
      integrate(upper, [&](double s) { return Matrix(f.regular(t - s) * g.value(s)); });
  return left + right;
}

}  // namespace rlfrac
