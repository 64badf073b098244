#pragma once

#include <utility>
#include <vector>

#include "rlfrac/family.hpp"
#include "rlfrac/oracle.hpp"
#include "rlfrac/report.hpp"

namespace rlfrac {

using TimePair = std::pair<double, double>;

/// {0.25, 0.5, 1, 2}^2 in lexicographic order, without (0.25, 0.25) when
/// alpha < 1.2, where the normalization degrades.
std::vector<TimePair> default_pairs(double alpha);

inline constexpr double kResolventTolerance = 1e-7;
inline constexpr double kCosineTolerance = 1e-3;
inline constexpr double kGeneratorTolerance = 1e-5;
inline constexpr double kCaputoTolerance = 1e-7;
inline constexpr double kLaplaceClosedTolerance = 1e-9;
inline constexpr double kLaplaceNumericTolerance = 1e-5;
inline constexpr double kUniquenessTolerance = 1e-8;

struct CheckOptions {
  int quad_order = kDefaultQuadOrder;  // used only where a closed form is missing
  double tolerance = 0.0;              // 0 selects the check's default
};

/// T(s) J^a T(t) - J^a T(s) T(t) = s^(a-2)/G(a-1) J^a T(t) - t^(a-2)/G(a-1) J^a T(s).
/// Residual is the maximum normalized residual over the pairs.
ResidualReport check_resolvent_equation(const FamilyOracle& fam, const FracOrder& order,
                                        const std::vector<TimePair>& pairs,
                                        const CheckOptions& options = {});

/// S(s) J^a S(t) - J^a S(s) S(t) = J^a S(t) - J^a S(s) for Caputo families.
ResidualReport check_caputo_resolvent(const FamilyOracle& fam, const FracOrder& order,
                                      const std::vector<TimePair>& pairs,
                                      const CheckOptions& options = {});

/// The three terms of the cosine equation at one (t, s), exposed for tests.
struct CosineTerms {
  Matrix lhs;     // Gamma(2-a) int_0^(t+s) T
  Matrix first;   // iint T(x)T(y) (t-x)^(1-a)
  Matrix second;  // iint T(x)T(y) (s-y)^(1-a)
  Matrix third;   // iint T(x)T(y) (t+s-x-y)^(1-a)
  Matrix corner;  // contribution of [t/2,t]x[s/2,s] to third
  Matrix rhs() const { return first + second - third; }
};

CosineTerms cosine_terms(const FamilyOracle& fam, const FracOrder& order, double t, double s, int n);

/// Gamma(2-a) int_0^(t+s) T = iint T(x)T(y) [(t-x)^(1-a) + (s-y)^(1-a) - (t+s-x-y)^(1-a)]
/// over [0,t]x[0,s]. The corner singularity of the last kernel at (t, s) is
/// resolved by a Duffy split of the corner panel. Throws
/// Error(corner_quadrature_unconverged) when doubling the order moves the
/// corner panel by more than 10% of the tolerance.
ResidualReport check_cosine_equation(const FamilyOracle& fam, const FracOrder& order,
                                     const std::vector<TimePair>& pairs,
                                     const CheckOptions& options = {.quad_order = 32});

struct RecoveryOptions {
  double t0 = 0.1;
  int levels = 12;  // t_k = t0 2^-k, k = 0..levels
  int quad_order = kDefaultQuadOrder;
  double tolerance = kGeneratorTolerance;
};

struct GeneratorRecovery {
  Matrix quotient_form;  // Gamma(2a-1) lim (G(t) - I/Gamma(a-1)) / t^a
  Matrix integral_form;  // Gamma(a+1) lim t^-a J^(2-a)(T - t^(a-2)/Gamma(a-1) I)
  double form_agreement = 0.0;
  double recovery_error = -1.0;  // relative Frobenius error against the known generator, -1 if unknown
  ResidualReport report;
};

/// Both limit realizations, Richardson-extrapolated in powers of t^alpha.
/// Throws Error(limit_unstable) when the raw sequence stops contracting.
GeneratorRecovery recover_generator(const FamilyOracle& fam, const FracOrder& order,
                                    const RecoveryOptions& options = {});

/// Pointwise and convolution-level agreement of two families that share a
/// generator. Throws Error(different_generators) when recovered generators
/// differ by more than 1e-4 (relative).
ResidualReport check_uniqueness(const FamilyOracle& a, const FamilyOracle& b, const FracOrder& order,
                                const std::vector<double>& grid, const CheckOptions& options = {});

struct LaplaceOptions {
  double horizon = 40.0;
  int panel_order = 32;
  int grading_levels = 12;
  double closed_tolerance = kLaplaceClosedTolerance;
  double numeric_tolerance = kLaplaceNumericTolerance;
};

/// Default abscissa 1 + growth bound.
double laplace_abscissa(const FamilyOracle& fam);

/// int_0^horizon e^(-lambda t) T(t) dt on a graded composite rule. Throws
/// Error(tail_too_heavy) when the estimated tail exceeds tail_budget.
Matrix numerical_laplace(const FamilyOracle& fam, double lambda, const LaplaceOptions& options,
                         double tail_budget);

/// Residual of (l^-a - m^-a) F(m) F(l) = l^(1-a) m^(1-a) (F(l)/l - F(m)/m).
double laplace_identity_residual(const Matrix& F_lambda, const Matrix& F_mu, double lambda,
                                 double mu, double alpha, double* abs_residual = nullptr);

/// Reports for the closed-form transform (when the family has one) and for
/// the numerical transform, in that order.
std::vector<ResidualReport> check_laplace_identity(const FamilyOracle& fam, const FracOrder& order,
                                                   const std::vector<TimePair>& lam_mu,
                                                   const LaplaceOptions& options = {});

std::vector<TimePair> default_laplace_points(const FamilyOracle& fam);

}  // namespace rlfrac
