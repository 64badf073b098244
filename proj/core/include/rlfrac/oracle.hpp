#pragma once

#include <functional>
#include <optional>
#include <string>

#include "rlfrac/family.hpp"
#include "rlfrac/types.hpp"

namespace rlfrac {

/// What the verifier sees of a family: T(t) = t^p G(t) for t > 0, plus
/// optional closed forms. Checks fall back to quadrature when a closed form
/// is absent.
struct FamilyOracle {
  std::string label;
  FamilyKind kind = FamilyKind::riemann_liouville;
  double exponent = 0.0;
  Eigen::Index dim = 0;
  RegularFn regular;
  std::function<Matrix(double)> jalpha;           // closed-form J^alpha T, may be empty
  std::function<Matrix(double)> laplace;          // closed-form transform, may be empty
  std::optional<Matrix> generator;                // known generator, if any
  double growth = 0.0;                            // exponential growth bound of T

  Matrix operator()(double t) const;
};

FamilyOracle make_oracle(const RLFamily& fam, std::string label = {});

/// T(t) + eps t^power I. The closed-form J^alpha follows by the power rule;
/// generator and transform are dropped. power = 2 by default: for alpha = 1.5
/// a linear perturbation is absorbed into a shifted generator, which no
/// axiom check can detect.
FamilyOracle corrupt(const FamilyOracle& oracle, const FracOrder& order, double eps,
                     double power = 2.0);

/// T(t) + eps t^(2alpha) I. The perturbation is O(t^2) relative to the
/// leading term, so the recovered generator is unchanged.
FamilyOracle perturb_keeping_generator(const FamilyOracle& oracle, const FracOrder& order,
                                       double eps);

}  // namespace rlfrac
