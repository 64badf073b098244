#include <cmath>
#include <sstream>

#include "parallel.hpp"
#include "rlfrac/error.hpp"
#include "rlfrac/jacobi.hpp"
#include "rlfrac/verifier.hpp"

namespace rlfrac {

namespace {

// Values f(x_i) * w_i for one mapped rule.
std::vector<Matrix> weighted(const MappedRule& rule, const std::function<Matrix(double)>& f) {
  std::vector<Matrix> out;
  out.reserve(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) out.push_back(rule.weights[i] * f(rule.nodes[i]));
  return out;
}

Matrix sum_of(const std::vector<Matrix>& values) {
  Matrix s = values.front();
  for (std::size_t i = 1; i < values.size(); ++i) s += values[i];
  return s;
}

// sum_ij kernel(x_i, y_j) X_i Y_j
template <class Kernel>
Matrix tensor_sum(const MappedRule& rx, const std::vector<Matrix>& X, const MappedRule& ry,
                  const std::vector<Matrix>& Y, Kernel kernel) {
  Matrix total = Matrix::Zero(X.front().rows(), Y.front().cols());
  for (std::size_t i = 0; i < X.size(); ++i) {
    Matrix row = Matrix::Zero(Y.front().rows(), Y.front().cols());
    for (std::size_t j = 0; j < Y.size(); ++j) row += kernel(rx.nodes[i], ry.nodes[j]) * Y[j];
    total += X[i] * row;
  }
  return total;
}

// Corner panel [t/2, t] x [s/2, s] of the third term. In u = t - x, v = s - y
// the kernel is (u + v)^(1-a); each triangle of the (u, v) rectangle is mapped
// to the unit square by a Duffy substitution whose radial Jacobian r combines
// with the kernel into the Jacobi weight r^(2-a).
Matrix corner_panel(const FamilyOracle& fam, double alpha, double t, double s, int n) {
  const double hu = 0.5 * t;
  const double hv = 0.5 * s;
  const auto radial = map_rule(*cached_jacobi_rule(n, 0.0, 2.0 - alpha), 0.0, 1.0);
  const auto angular = map_rule(*cached_jacobi_rule(n, 0.0, 0.0), 0.0, 1.0);
  const double k = 1.0 - alpha;
  const Eigen::Index d = fam.dim;
  Matrix total = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const double r = radial.nodes[i];
    const Matrix Tx = fam(t - hu * r);  // triangle v/hv <= u/hu
    const Matrix Ty = fam(s - hv * r);  // triangle u/hu <= v/hv
    Matrix a = Matrix::Zero(d, d);
    Matrix b = Matrix::Zero(d, d);
    for (std::size_t j = 0; j < angular.nodes.size(); ++j) {
      const double q = angular.nodes[j];
      a += (angular.weights[j] * std::pow(hu + hv * q, k)) * fam(s - hv * r * q);
      b += (angular.weights[j] * std::pow(hu * q + hv, k)) * fam(t - hu * r * q);
    }
    total += (radial.weights[i] * hu * hv) * (Tx * a + b * Ty);
  }
  return total;
}

}  // namespace

CosineTerms cosine_terms(const FamilyOracle& fam, const FracOrder& order, double t, double s, int n) {
  if (!(t > 0.0) || !(s > 0.0)) throw Error(ErrorCode::invalid_argument, "cosine terms need t, s > 0");
  const double alpha = order.alpha();
  const double p = fam.exponent;
  const double k = 1.0 - alpha;
  const std::function<Matrix(double)> G = fam.regular;
  const std::function<Matrix(double)> T = [&fam](double x) { return fam(x); };

  CosineTerms out;
  const auto whole = map_rule(*cached_jacobi_rule(n, 0.0, p), 0.0, t + s);
  out.lhs = std::tgamma(2.0 - alpha) * sum_of(weighted(whole, G));

  // First two terms factor into products of one-dimensional integrals.
  const auto plain_t = map_rule(*cached_jacobi_rule(n, 0.0, p), 0.0, t);
  const auto plain_s = map_rule(*cached_jacobi_rule(n, 0.0, p), 0.0, s);
  const auto kern_t = map_rule(*cached_jacobi_rule(n, k, p), 0.0, t);
  const auto kern_s = map_rule(*cached_jacobi_rule(n, k, p), 0.0, s);
  const Matrix It = sum_of(weighted(plain_t, G));
  const Matrix Is = sum_of(weighted(plain_s, G));
  out.first = sum_of(weighted(kern_t, G)) * Is;
  out.second = It * sum_of(weighted(kern_s, G));

  // Third term: split [0,t]x[0,s] at (t/2, s/2); only the corner panel sees
  // the singular kernel.
  const double ts = t + s;
  auto kernel = [ts, k](double x, double y) { return std::pow(ts - x - y, k); };
  const auto low_t = map_rule(*cached_jacobi_rule(n, 0.0, p), 0.0, 0.5 * t);
  const auto low_s = map_rule(*cached_jacobi_rule(n, 0.0, p), 0.0, 0.5 * s);
  const auto high_t = map_rule(*cached_jacobi_rule(n, 0.0, 0.0), 0.5 * t, t);
  const auto high_s = map_rule(*cached_jacobi_rule(n, 0.0, 0.0), 0.5 * s, s);
  const auto Glt = weighted(low_t, G);
  const auto Gls = weighted(low_s, G);
  const auto Tht = weighted(high_t, T);
  const auto Ths = weighted(high_s, T);
  out.corner = corner_panel(fam, alpha, t, s, n);
  out.third = tensor_sum(low_t, Glt, low_s, Gls, kernel) + tensor_sum(low_t, Glt, high_s, Ths, kernel) +
              tensor_sum(high_t, Tht, low_s, Gls, kernel) + out.corner;
  return out;
}

ResidualReport check_cosine_equation(const FamilyOracle& fam, const FracOrder& order,
                                     const std::vector<TimePair>& pairs, const CheckOptions& options) {
  if (pairs.empty()) throw Error(ErrorCode::invalid_argument, "no (t, s) pairs given");
  if (options.quad_order < 8) throw Error(ErrorCode::invalid_argument, "quadrature order must be >= 8");
  const int n = options.quad_order;
  const double tol = options.tolerance > 0.0 ? options.tolerance : kCosineTolerance;

  struct Outcome {
    double abs = 0.0;
    double rel = 0.0;
    double corner_shift = 0.0;
  };
  const auto outcomes = detail::parallel_map(pairs.size(), [&](std::size_t i) {
    const auto [t, s] = pairs[i];
    if (!(t > 0.0) || !(s > 0.0)) {
      throw Error(ErrorCode::invalid_argument, "check pairs must be strictly positive");
    }
    const CosineTerms terms = cosine_terms(fam, order, t, s, n);
    const Matrix rhs = terms.rhs();
    const double diff = (terms.lhs - rhs).norm();
    const double scale = 1.0 + std::max(terms.lhs.norm(), rhs.norm());
    const Matrix refined = corner_panel(fam, order.alpha(), t, s, 2 * n);
    return Outcome{diff, diff / scale, (refined - terms.corner).norm() / scale};
  });

  ResidualReport report;
  report.check_id = "cosine";
  report.family = fam.label;
  report.tolerance = tol;
  report.quadrature_order = n;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (outcomes[i].corner_shift > 0.1 * tol) {
      std::ostringstream os;
      os << "corner panel at (t, s) = (" << pairs[i].first << ", " << pairs[i].second
         << ") moved by " << outcomes[i].corner_shift << " when doubling order " << n;
      throw Error(ErrorCode::corner_quadrature_unconverged, os.str());
    }
    report.points.push_back({pairs[i].first, pairs[i].second});
    report.abs_residual = std::max(report.abs_residual, outcomes[i].abs);
    report.rel_residual = std::max(report.rel_residual, outcomes[i].rel);
    if (std::isnan(outcomes[i].rel)) report.rel_residual = outcomes[i].rel;
  }
  report.finalize();
  return report;
}

}  // namespace rlfrac
