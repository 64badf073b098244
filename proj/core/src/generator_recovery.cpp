#include <cmath>
#include <limits>
#include <sstream>

#include "rlfrac/error.hpp"
#include "rlfrac/frac_calc.hpp"
#include "rlfrac/jacobi.hpp"
#include "rlfrac/verifier.hpp"

namespace rlfrac {

namespace {

// Richardson table for x(t_k) = L + c1 t_k^alpha + c2 t_k^(2 alpha) + ...,
// t_k = t0 2^-k. Returns the entry whose column neighbour is closest.
Matrix richardson(const std::vector<Matrix>& seq, double alpha) {
  const std::size_t m = seq.size();
  const std::size_t depth = std::min<std::size_t>(m - 1, 5);
  std::vector<std::vector<Matrix>> table(m);
  for (std::size_t k = 0; k < m; ++k) {
    table[k].push_back(seq[k]);
    for (std::size_t j = 1; j <= std::min(k, depth); ++j) {
      const double rho = std::pow(2.0, static_cast<double>(j) * alpha);
      table[k].push_back((rho * table[k][j - 1] - table[k - 1][j - 1]) / (rho - 1.0));
    }
  }
  Matrix best = seq.back();
  double best_diff = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j <= depth; ++j) {
    for (std::size_t k = j + 1; k < m; ++k) {
      const double diff = (table[k][j] - table[k - 1][j]).norm();
      if (diff < best_diff) {
        best_diff = diff;
        best = table[k][j];
      }
    }
  }
  return best;
}

void require_contracting(const std::vector<Matrix>& seq, const std::vector<double>& noise,
                         std::string_view what) {
  for (std::size_t k = 2; k < seq.size(); ++k) {
    const double prev = (seq[k - 1] - seq[k - 2]).norm();
    const double curr = (seq[k] - seq[k - 1]).norm();
    if (curr > 2.0 * prev && curr > 10.0 * noise[k]) {
      std::ostringstream os;
      os << what << " sequence stops contracting at level " << k << " (step " << curr
         << " after " << prev << ")";
      throw Error(ErrorCode::limit_unstable, os.str());
    }
  }
}

double relative_difference(const Matrix& a, const Matrix& b) {
  const double scale = a.norm();
  const double diff = (a - b).norm();
  return scale > 0.0 ? diff / scale : diff;
}

}  // namespace

GeneratorRecovery recover_generator(const FamilyOracle& fam, const FracOrder& order,
                                    const RecoveryOptions& options) {
  if (fam.kind != FamilyKind::riemann_liouville) {
    throw Error(ErrorCode::invalid_argument, "generator recovery expects a Riemann-Liouville family");
  }
  if (options.levels < 2 || !(options.t0 > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "recovery needs t0 > 0 and at least two levels");
  }
  const double alpha = order.alpha();
  const double quotient_scale = std::tgamma(2.0 * alpha - 1.0);
  const double integral_scale = std::tgamma(alpha + 1.0) / std::tgamma(2.0 - alpha);
  const Matrix g0 = fam.regular(0.0);
  constexpr double eps = std::numeric_limits<double>::epsilon();

  // The integral form integrates (G(x) - G(0)) / x^alpha against
  // (t - x)^(1-alpha) x^(p+alpha): the leading x^alpha behaviour is in the weight.
  const auto rule = cached_jacobi_rule(options.quad_order, 1.0 - alpha, fam.exponent + alpha);

  std::vector<Matrix> quotient_seq;
  std::vector<Matrix> integral_seq;
  std::vector<double> noise;
  GeneratorRecovery out;
  for (int k = 0; k <= options.levels; ++k) {
    const double t = std::ldexp(options.t0, -k);
    const double ta = std::pow(t, alpha);
    const Matrix G = fam.regular(t);
    quotient_seq.push_back(quotient_scale * (G - g0) / ta);
    noise.push_back(64.0 * eps * quotient_scale * (1.0 + G.norm()) / ta);
    const auto mapped = map_rule(*rule, 0.0, t);
    const Matrix integral = integrate(mapped, [&](double x) {
      return Matrix((fam.regular(x) - g0) / std::pow(x, alpha));
    });
    integral_seq.push_back(integral_scale * integral / ta);
    out.report.points.push_back({t});
  }
  require_contracting(quotient_seq, noise, "limit");
  require_contracting(integral_seq, noise, "integral-form");

  out.quotient_form = richardson(quotient_seq, alpha);
  out.integral_form = richardson(integral_seq, alpha);
  out.form_agreement = relative_difference(out.quotient_form, out.integral_form);

  ResidualReport& report = out.report;
  report.check_id = "generator";
  report.family = fam.label;
  report.tolerance = options.tolerance;
  report.quadrature_order = options.quad_order;
  if (fam.generator) {
    out.recovery_error = relative_difference(*fam.generator, out.quotient_form);
    report.abs_residual = (*fam.generator - out.quotient_form).norm();
    report.rel_residual = std::max(out.recovery_error, out.form_agreement);
    std::ostringstream os;
    os << "recovery error " << out.recovery_error << ", form agreement " << out.form_agreement;
    report.note = os.str();
  } else {
    report.abs_residual = (out.quotient_form - out.integral_form).norm();
    report.rel_residual = out.form_agreement;
    report.note = "generator unknown; form agreement only";
  }
  report.finalize();
  return out;
}

}  // namespace rlfrac
