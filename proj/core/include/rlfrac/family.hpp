#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "rlfrac/frac_calc.hpp"
#include "rlfrac/generator.hpp"
#include "rlfrac/mittag_leffler.hpp"
#include "rlfrac/trajectory.hpp"
#include "rlfrac/types.hpp"

namespace rlfrac {

/// Fractional order alpha in (1, 2) with its derived exponents.
class FracOrder {
 public:
  explicit FracOrder(double alpha);

  double alpha() const noexcept { return alpha_; }
  double alpha_m1() const noexcept { return alpha_ - 1.0; }
  double alpha_m2() const noexcept { return alpha_ - 2.0; }
  double two_alpha_m2() const noexcept { return 2.0 * alpha_ - 2.0; }

 private:
  double alpha_;
};

enum class FamilyKind { riemann_liouville, caputo };

std::string_view to_string(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view text);  // "rl" or "caputo"

/// Solution family of D^alpha u = A u built from Mittag-Leffler functions.
///
/// Riemann-Liouville:  T(t) = t^(alpha-2) E_{alpha,alpha-1}(t^alpha A),
///                     J^alpha T(t) = t^(2alpha-2) E_{alpha,2alpha-1}(t^alpha A).
/// Caputo:             S(t) = E_{alpha,1}(t^alpha A),
///                     J^alpha S(t) = t^alpha E_{alpha,alpha+1}(t^alpha A).
/// Immutable; evaluation at distinct times may run concurrently.
class RLFamily {
 public:
  RLFamily(FracOrder order, std::shared_ptr<const Generator> gen, FamilyKind kind,
           double tol = kDefaultMLTolerance);

  const FracOrder& order() const noexcept { return order_; }
  const Generator& generator() const noexcept { return *gen_; }
  std::shared_ptr<const Generator> generator_ptr() const noexcept { return gen_; }
  FamilyKind kind() const noexcept { return kind_; }
  double tolerance() const noexcept { return tol_; }

  /// Singular exponent p in T(t) = t^p G(t): alpha - 2 or 0.
  double exponent() const noexcept;

  /// G(0+): I / Gamma(alpha - 1) or I.
  Matrix g0() const;

  /// Regular part G(t), defined for t >= 0.
  Matrix regular(double t) const;

  /// T(t) for t > 0.
  Matrix operator()(double t) const;

  /// J^alpha T(t) in closed form, t > 0.
  Matrix jalpha(double t) const;

  /// Laplace transform at real lambda above the growth bound:
  /// lambda (lambda^alpha - A)^-1, or lambda^(alpha-1) (lambda^alpha - A)^-1 for Caputo.
  Matrix laplace(double lambda) const;

  /// Exponential growth bound rho(A)^(1/alpha).
  double growth_bound() const;

 private:
  FracOrder order_;
  std::shared_ptr<const Generator> gen_;
  FamilyKind kind_;
  double tol_;
  MittagLeffler main_;
  MittagLeffler image_;
};

RLFamily build_family(const FracOrder& order, const Generator& gen, FamilyKind kind,
                      double tol = kDefaultMLTolerance);

/// Samples G on the grid; the trajectory keeps the family as its dense evaluator.
SingularTrajectory sample_family(const RLFamily& fam, const std::vector<double>& grid);

/// Closed-form J^alpha T(t); Riemann-Liouville families only.
Matrix jalpha_family(const RLFamily& fam, double t);

enum class GridType { geometric, uniform, mixed };

struct GridSpec {
  GridType type = GridType::mixed;
  double horizon = 2.0;
  int count = 32;
};

GridType parse_grid_type(std::string_view text);
std::string_view to_string(GridType type);

/// geometric: {T 2^-k, k < count}; uniform: {T i / count, 1 <= i <= count};
/// mixed: union of both, so the singular layer and the bulk are sampled.
std::vector<double> make_grid(const GridSpec& spec);

struct InitialCertification {
  Vector limit;              // extrapolated Gamma(alpha-1) t^(2-alpha) u(t) as t -> 0
  double limit_error = 0.0;  // ||limit - x|| / (1 + ||x||)
  bool limit_passed = false;
  std::vector<double> slope_times;
  std::vector<double> slope_values;  // |d/dt J^(2-alpha) u| at slope_times
  double slope = 0.0;                // least-squares log-log slope
  double slope_threshold = 0.0;      // alpha - 1 - 0.05
  bool derivative_vanishes = false;  // A x = 0: nothing to fit
  bool slope_passed = false;
  bool passed() const { return limit_passed && slope_passed; }
};

struct CauchySolution {
  SingularTrajectory trajectory;
  InitialCertification certification;
};

struct CauchyOptions {
  double tol = kDefaultMLTolerance;
  double limit_tolerance = 1e-6;
  int quad_order = kDefaultQuadOrder;
};

/// u(t) = T(t) x on the grid, with a certificate for the weighted initial
/// conditions Gamma(alpha-1) t^(2-alpha) u(t) -> x and d/dt J^(2-alpha) u -> 0.
CauchySolution solve_rl_cauchy(const FracOrder& order, const Generator& gen, const Vector& x,
                               const std::vector<double>& grid, const CauchyOptions& options = {});

}  // namespace rlfrac
