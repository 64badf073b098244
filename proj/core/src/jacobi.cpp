#include "rlfrac/jacobi.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "rlfrac/error.hpp"

namespace rlfrac {

double jacobi_moment(double a, double b) {
  return std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                  std::lgamma(a + b + 2.0));
}

JacobiRule jacobi_rule(int n, double a, double b) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "Jacobi rule needs at least one node");
  if (!(a > -1.0) || !(b > -1.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorCode::invalid_jacobi_exponent,
                "Jacobi exponents must exceed -1 (a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
  }

  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(n > 1 ? n - 1 : 0);
  const double ab = a + b;
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    if (k == 0) {
      diag(k) = (b - a) / (ab + 2.0);
    } else {
      diag(k) = (b * b - a * a) / (s * (s + 2.0));
    }
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double beta;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    off(k - 1) = std::sqrt(beta);
  }

  JacobiRule rule;
  rule.n = n;
  rule.a = a;
  rule.b = b;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mu0 = jacobi_moment(a, b);
  if (n == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = mu0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::invalid_argument, "tridiagonal eigenproblem failed for Jacobi rule");
  }
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v * v;
  }
  return rule;
}

std::shared_ptr<const JacobiRule> cached_jacobi_rule(int n, double a, double b) {
  static std::mutex mutex;
  static std::map<std::tuple<int, double, double>, std::shared_ptr<const JacobiRule>> cache;
  const auto key = std::make_tuple(n, a, b);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const JacobiRule>(jacobi_rule(n, a, b));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(rule)).first->second;
}

MappedRule map_rule(const JacobiRule& rule, double lo, double hi) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  const double scale = std::pow(half, rule.a + rule.b + 1.0);
  MappedRule out;
  out.nodes.resize(rule.nodes.size());
  out.weights.resize(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    out.nodes[i] = mid + half * rule.nodes[i];
    out.weights[i] = scale * rule.weights[i];
  }
  return out;
}

}  // namespace rlfrac
