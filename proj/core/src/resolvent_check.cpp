#include <cmath>
#include <sstream>

#include "parallel.hpp"
#include "rlfrac/error.hpp"
#include "rlfrac/frac_calc.hpp"
#include "rlfrac/gamma.hpp"
#include "rlfrac/verifier.hpp"

namespace rlfrac {

namespace {

struct PairResidual {
  double abs = 0.0;
  double rel = 0.0;
};

void validate_pairs(const std::vector<TimePair>& pairs) {
  if (pairs.empty()) throw Error(ErrorCode::invalid_argument, "no (t, s) pairs given");
  for (const auto& [t, s] : pairs) {
    if (!(t > 0.0) || !(s > 0.0) || !std::isfinite(t) || !std::isfinite(s)) {
      throw Error(ErrorCode::invalid_argument, "check pairs must be strictly positive");
    }
  }
}

Matrix jalpha_of(const FamilyOracle& fam, const FracOrder& order, double t, int n) {
  if (fam.jalpha) return fam.jalpha(t);
  return jacobi_integral(fam.regular, fam.exponent, order.alpha(), t, n);
}

ResidualReport run_resolvent(const FamilyOracle& fam, const FracOrder& order,
                             const std::vector<TimePair>& pairs, const CheckOptions& options,
                             bool caputo) {
  validate_pairs(pairs);
  if (options.quad_order < 8) throw Error(ErrorCode::invalid_argument, "quadrature order must be >= 8");
  const double c = reciprocal_gamma(order.alpha_m1());
  const double am2 = order.alpha_m2();

  const auto residuals = detail::parallel_map(pairs.size(), [&](std::size_t i) {
    const auto [t, s] = pairs[i];
    const Matrix Tt = fam(t);
    const Matrix Ts = fam(s);
    const Matrix Jt = jalpha_of(fam, order, t, options.quad_order);
    const Matrix Js = jalpha_of(fam, order, s, options.quad_order);
    const Matrix lhs = Ts * Jt - Js * Tt;
    const Matrix rhs = caputo ? Matrix(Jt - Js)
                              : Matrix((c * std::pow(s, am2)) * Jt - (c * std::pow(t, am2)) * Js);
    const double diff = (lhs - rhs).norm();
    return PairResidual{diff, normalized_residual(diff, lhs.norm(), rhs.norm())};
  });

  ResidualReport report;
  report.check_id = caputo ? "caputo" : "resolvent";
  report.family = fam.label;
  report.tolerance = options.tolerance > 0.0 ? options.tolerance
                                             : (caputo ? kCaputoTolerance : kResolventTolerance);
  report.quadrature_order = fam.jalpha ? 0 : options.quad_order;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    report.points.push_back({pairs[i].first, pairs[i].second});
    report.abs_residual = std::max(report.abs_residual, residuals[i].abs);
    report.rel_residual = std::max(report.rel_residual, residuals[i].rel);
    if (std::isnan(residuals[i].rel)) report.rel_residual = residuals[i].rel;
  }
  report.note = fam.jalpha ? "closed-form J^alpha" : "quadrature J^alpha";
  report.finalize();
  return report;
}

}  // namespace

std::vector<TimePair> default_pairs(double alpha) {
  const double times[] = {0.25, 0.5, 1.0, 2.0};
  std::vector<TimePair> pairs;
  for (double t : times) {
    for (double s : times) {
      if (alpha < 1.2 && t == 0.25 && s == 0.25) continue;
      pairs.emplace_back(t, s);
    }
  }
  return pairs;
}

ResidualReport check_resolvent_equation(const FamilyOracle& fam, const FracOrder& order,
                                        const std::vector<TimePair>& pairs,
                                        const CheckOptions& options) {
  if (fam.kind != FamilyKind::riemann_liouville) {
    throw Error(ErrorCode::invalid_argument, "resolvent check expects a Riemann-Liouville family");
  }
  return run_resolvent(fam, order, pairs, options, false);
}

ResidualReport check_caputo_resolvent(const FamilyOracle& fam, const FracOrder& order,
                                      const std::vector<TimePair>& pairs,
                                      const CheckOptions& options) {
  if (fam.kind != FamilyKind::caputo) {
    throw Error(ErrorCode::invalid_argument, "caputo check expects a Caputo family");
  }
  return run_resolvent(fam, order, pairs, options, true);
}

}  // namespace rlfrac
