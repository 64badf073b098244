#include <cmath>
#include <limits>
#include <sstream>

#include "rlfrac/error.hpp"
#include "rlfrac/jacobi.hpp"
#include "rlfrac/verifier.hpp"

namespace rlfrac {

double laplace_abscissa(const FamilyOracle& fam) { return 1.0 + fam.growth; }

std::vector<TimePair> default_laplace_points(const FamilyOracle& fam) {
  const double a = laplace_abscissa(fam);
  return {{a, a + 1.0}, {a + 0.5, a + 2.0}, {a + 1.0, a + 3.0}};
}

Matrix numerical_laplace(const FamilyOracle& fam, double lambda, const LaplaceOptions& options,
                         double tail_budget) {
  if (!(options.horizon > 1.0)) throw Error(ErrorCode::invalid_argument, "Laplace horizon must exceed 1");
  if (options.panel_order < 4 || options.grading_levels < 1) {
    throw Error(ErrorCode::invalid_argument, "Laplace rule needs panel order >= 4 and grading >= 1");
  }
  const double H = options.horizon;
  const double tail_rate = lambda - fam.growth;
  const double tail = tail_rate > 0.0 ? fam(H).norm() * std::exp(-lambda * H) / tail_rate
                                      : std::numeric_limits<double>::infinity();
  if (!(tail <= tail_budget)) {
    std::ostringstream os;
    os << "tail beyond t=" << H << " estimated at " << tail << " for lambda=" << lambda;
    throw Error(ErrorCode::tail_too_heavy, os.str());
  }

  const auto legendre = cached_jacobi_rule(options.panel_order, 0.0, 0.0);
  auto T = [&](double t) { return Matrix(std::exp(-lambda * t) * fam(t)); };
  // Innermost panel carries t^p in the weight; graded panels then resolve the
  // t^alpha behaviour of G near 0; unit panels cover the bulk.
  const double h0 = std::ldexp(1.0, -options.grading_levels);
  const auto inner = map_rule(*cached_jacobi_rule(options.panel_order, 0.0, fam.exponent), 0.0, h0);
  Matrix total = integrate(inner, [&](double t) { return Matrix(std::exp(-lambda * t) * fam.regular(t)); });
  for (int k = options.grading_levels; k >= 1; --k) {
    total += integrate(map_rule(*legendre, std::ldexp(1.0, -k), std::ldexp(1.0, 1 - k)), T);
  }
  for (double lo = 1.0; lo < H; lo += 1.0) {
    total += integrate(map_rule(*legendre, lo, std::min(lo + 1.0, H)), T);
  }
  return total;
}

double laplace_identity_residual(const Matrix& F_lambda, const Matrix& F_mu, double lambda, double mu,
                                 double alpha, double* abs_residual) {
  const Matrix lhs = (std::pow(lambda, -alpha) - std::pow(mu, -alpha)) * (F_mu * F_lambda);
  const Matrix rhs = (std::pow(lambda, 1.0 - alpha) * std::pow(mu, 1.0 - alpha)) *
                     (F_lambda / lambda - F_mu / mu);
  const double diff = (lhs - rhs).norm();
  if (abs_residual) *abs_residual = diff;
  return normalized_residual(diff, lhs.norm(), rhs.norm());
}

std::vector<ResidualReport> check_laplace_identity(const FamilyOracle& fam, const FracOrder& order,
                                                   const std::vector<TimePair>& lam_mu,
                                                   const LaplaceOptions& options) {
  if (lam_mu.empty()) throw Error(ErrorCode::invalid_argument, "no (lambda, mu) points given");
  const double abscissa = laplace_abscissa(fam);
  for (const auto& [l, m] : lam_mu) {
    if (!(l >= abscissa) || !(m >= abscissa)) {
      std::ostringstream os;
      os << "Laplace points must be at least the abscissa " << abscissa;
      throw Error(ErrorCode::invalid_argument, os.str());
    }
  }

  auto make = [&](std::string id, double tol, int quad) {
    ResidualReport r;
    r.check_id = std::move(id);
    r.family = fam.label;
    r.tolerance = tol;
    r.quadrature_order = quad;
    return r;
  };
  std::vector<ResidualReport> reports;
  const double alpha = order.alpha();

  if (fam.laplace) {
    auto r = make("laplace-closed", options.closed_tolerance, 0);
    for (const auto& [l, m] : lam_mu) {
      double abs = 0.0;
      const double rel = laplace_identity_residual(fam.laplace(l), fam.laplace(m), l, m, alpha, &abs);
      r.points.push_back({l, m});
      r.abs_residual = std::max(r.abs_residual, abs);
      r.rel_residual = std::max(r.rel_residual, rel);
    }
    r.finalize();
    reports.push_back(std::move(r));
  }

  auto r = make("laplace-numeric", options.numeric_tolerance, options.panel_order);
  const double budget = 0.1 * options.numeric_tolerance;
  for (const auto& [l, m] : lam_mu) {
    double abs = 0.0;
    const double rel = laplace_identity_residual(numerical_laplace(fam, l, options, budget),
                                                 numerical_laplace(fam, m, options, budget), l, m,
                                                 alpha, &abs);
    r.points.push_back({l, m});
    r.abs_residual = std::max(r.abs_residual, abs);
    r.rel_residual = std::max(r.rel_residual, rel);
  }
  std::ostringstream os;
  os << "horizon " << options.horizon;
  r.note = os.str();
  r.finalize();
  reports.push_back(std::move(r));
  return reports;
}

}  // namespace rlfrac
