#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>

#include "rlfrac/types.hpp"

namespace rlfrac {

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta).
/// beta may be non-positive; coefficients at Gamma poles are exactly zero.
struct MLParams {
  double alpha = 1.0;
  double beta = 1.0;
};

enum class MLBranch {
  series,           // power series in long double
  series_extended,  // power series in 50-digit arithmetic (cancellation too strong for long double)
  asymptotic,       // exponential residues plus algebraic tail
};

std::string_view to_string(MLBranch branch);

struct MLEvaluation {
  Complex value;
  double error_estimate = 0.0;  // absolute
  MLBranch branch = MLBranch::series;
  int terms = 0;
};

inline constexpr double kDefaultMLTolerance = 1e-14;

/// Evaluator for one (alpha, beta) pair. Coefficient tables are built once;
/// copies share them and concurrent evaluation is safe.
///
/// Accuracy contract: |error| <= tol * max(1, |E(z)|). Below the switch
/// radius the power series is summed in long double, escalating to 50-digit
/// arithmetic when the rounding estimate eps * sum|terms| exceeds the budget.
/// Above it, the sum over residues (1/alpha) Z^(1-beta) exp(Z) at the roots
/// Z of Z^alpha = z with |arg Z| < pi, minus sum_j z^-j / Gamma(beta - alpha j)
/// truncated at its smallest term, is used.
class MittagLeffler {
 public:
  explicit MittagLeffler(MLParams params, double tol = kDefaultMLTolerance,
                         std::optional<double> switch_radius = std::nullopt);

  Complex operator()(Complex z) const { return evaluate(z).value; }

  MLEvaluation evaluate(Complex z) const;

  /// Forced branches, exposed so the two can be cross-checked.
  MLEvaluation series(Complex z) const;
  MLEvaluation asymptotic(Complex z) const;

  const MLParams& params() const noexcept { return params_; }
  double tolerance() const noexcept { return tol_; }
  double switch_radius() const noexcept { return switch_radius_; }

  /// 1/Gamma(alpha k + beta) in long double; zero past the table end.
  long double coefficient(std::size_t k) const;
  std::size_t coefficient_count() const;

  /// Radius where the asymptotic tail's smallest term drops below tol:
  /// (ln(1/tol) + 10)^alpha.
  static double default_switch_radius(double alpha, double tol);

 private:
  struct Tables;

  MLEvaluation series_extended(Complex z) const;

  MLParams params_;
  double tol_;
  double switch_radius_;
  std::shared_ptr<Tables> tables_;
};

/// One-shot scalar evaluation. Throws Error(ml_divergence) when no branch
/// reaches the tolerance within the term budget.
Complex ml_scalar(MLParams params, Complex z, double tol = kDefaultMLTolerance);

}  // namespace rlfrac
