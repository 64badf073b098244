#pragma once

#include <memory>
#include <type_traits>
#include <vector>

namespace rlfrac {

/// Gauss-Jacobi rule on [-1, 1] for the weight (1 - x)^a (1 + x)^b.
struct JacobiRule {
  int n = 0;
  double a = 0.0;  // exponent at x = +1
  double b = 0.0;  // exponent at x = -1
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // positive
};

/// Golub-Welsch construction from the three-term Jacobi recurrence.
/// Throws Error(invalid_jacobi_exponent) if a or b <= -1, invalid_argument if n < 1.
JacobiRule jacobi_rule(int n, double a, double b);

/// Same rule, memoized per (n, a, b). Safe for concurrent use.
std::shared_ptr<const JacobiRule> cached_jacobi_rule(int n, double a, double b);

/// 2^(a+b+1) B(a+1, b+1), the total mass of the weight.
double jacobi_moment(double a, double b);

/// Nodes and weights transplanted to [lo, hi] for the weight
/// (hi - x)^a (x - lo)^b, so that sum w_i f(x_i) ~ int_lo^hi (hi-x)^a (x-lo)^b f(x) dx.
struct MappedRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

MappedRule map_rule(const JacobiRule& rule, double lo, double hi);

/// Applies a mapped rule in fixed node order. f(x) may return any type
/// supporting scalar multiplication and addition.
template <class F>
auto integrate(const MappedRule& rule, F&& f) -> std::decay_t<decltype(f(0.0))> {
  using R = std::decay_t<decltype(f(0.0))>;
  R sum = f(rule.nodes[0]) * rule.weights[0];
  for (std::size_t i = 1; i < rule.nodes.size(); ++i) {
    sum += f(rule.nodes[i]) * rule.weights[i];
  }
  return sum;
}

}  // namespace rlfrac
