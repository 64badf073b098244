#pragma once

#include <optional>

#include "rlfrac/trajectory.hpp"
#include "rlfrac/types.hpp"

namespace rlfrac {

inline constexpr int kDefaultQuadOrder = 64;

/// J^order of f(t) = t^p G(t) at time t:
///   (1/Gamma(order)) int_0^t (t - s)^(order-1) s^p G(s) ds
/// with both endpoint powers absorbed into one Gauss-Jacobi weight.
/// Throws non_integrable_singularity for p <= -1, out_of_range for t <= 0.
Matrix jacobi_integral(const RegularFn& g, double p, double order, double t, int n);

/// J^alpha_int of a sampled trajectory. t must lie in (0, horizon].
Matrix frac_integral(const SingularTrajectory& f, double alpha_int, double t,
                     int n = kDefaultQuadOrder);

struct DerivativeOptions {
  std::optional<double> step;  // default min(local grid spacing, t/8)
  int quad_order = kDefaultQuadOrder;
};

/// D^alpha_d f = (d/dt)^2 J^(2 - alpha_d) f, alpha_d in (1, 2). Central second
/// differences with steps h and h/2 combined by one Richardson step, so the
/// truncation error is O(h^4) for smooth J^(2-alpha_d) f.
/// Throws out_of_range when t +- h leaves (0, horizon].
Matrix frac_derivative(const SingularTrajectory& f, double alpha_d, double t,
                       const DerivativeOptions& options = {});

/// int_0^t f(t - s) g(s) ds, split at t/2 so each half carries one endpoint
/// singularity in its Jacobi weight.
Matrix convolve_singular(const SingularTrajectory& f, const SingularTrajectory& g, double t,
                         int n = kDefaultQuadOrder);

}  // namespace rlfrac
