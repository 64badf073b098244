#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracle_values.hpp"
#include "rlfrac/error.hpp"
#include "rlfrac/family.hpp"
#include "rlfrac/frac_calc.hpp"
#include "rlfrac/jacobi.hpp"
#include "test_support.hpp"

namespace rlfrac {
namespace {

Matrix one() { return Matrix::Identity(1, 1); }

// Trajectory of t^p G(t) with G given in closed form.
SingularTrajectory dense(double p, double horizon, RegularFn g) {
  std::vector<double> grid;
  for (int i = 1; i <= 64; ++i) grid.push_back(horizon * i / 64.0);
  std::vector<Matrix> samples;
  for (double t : grid) samples.push_back(g(t));
  const Matrix g0 = g(0.0);
  return SingularTrajectory(p, grid, samples, g0, std::move(g));
}

SingularTrajectory scalar_family(double alpha, double a, double horizon) {
  const RLFamily fam = build_family(FracOrder(alpha), Generator::real(testing::scalar(a)),
                                    FamilyKind::riemann_liouville);
  std::vector<double> grid;
  for (int i = 1; i <= 64; ++i) grid.push_back(horizon * i / 64.0);
  return sample_family(fam, grid);
}

TEST(FracIntegral, ConstantFunction) {
  const auto f = dense(0.0, 2.0, [](double) { return one(); });
  EXPECT_NEAR(frac_integral(f, 1.5, 1.0)(0, 0).real(), 1.0 / std::tgamma(2.5), 1e-14);
}

TEST(FracIntegral, PowerRuleOnSingularKernel) {
  const double alpha = 1.5;
  const double c = 1.0 / std::tgamma(alpha - 1.0);
  const auto f = dense(alpha - 2.0, 2.0, [c](double) { return Matrix(c * one()); });
  const double want = std::pow(2.0, 2.0 * alpha - 2.0) / std::tgamma(2.0 * alpha - 1.0);
  EXPECT_NEAR(frac_integral(f, alpha, 2.0)(0, 0).real(), want, 1e-14);
}

TEST(FracIntegral, ScalarFamilyMatchesSeriesImage) {
  const auto f = scalar_family(1.5, -1.0, 2.0);
  EXPECT_NEAR(frac_integral(f, 1.5, 1.0, 128)(0, 0).real(), oracle::kE15_2_m1, 1e-8);
}

TEST(FracIntegral, ErrorShrinksWhenOrderDoubles) {
  const auto f = scalar_family(1.5, -1.0, 2.0);
  double previous = std::abs(frac_integral(f, 1.5, 1.0, 8)(0, 0).real() - oracle::kE15_2_m1);
  for (int n : {16, 32, 64}) {
    const double err = std::abs(frac_integral(f, 1.5, 1.0, n)(0, 0).real() - oracle::kE15_2_m1);
    EXPECT_LE(4.0 * err, previous) << "n=" << n;
    previous = err;
  }
}

TEST(FracIntegral, FirstOrderIsPlainQuadrature) {
  const auto f = dense(0.0, 1.0, [](double t) { return Matrix(std::cos(3.0 * t) * one()); });
  EXPECT_NEAR(frac_integral(f, 1.0, 0.8)(0, 0).real(), std::sin(2.4) / 3.0, 1e-14);
}

TEST(FracIntegral, SemigroupProperty) {
  // f(t) = t^-0.5 (1 + t + t^2); J^b f is evaluated by quadrature inside J^a.
  const double p = -0.5;
  const RegularFn g = [](double t) { return Matrix((1.0 + t + t * t) * one()); };
  for (double alpha : {1.25, 1.5, 1.75}) {
    const double orders[] = {0.3, alpha - 1.0, alpha};
    for (double a : orders) {
      for (double b : orders) {
        const RegularFn inner = [&](double s) {
          if (s == 0.0) return Matrix(Matrix::Zero(1, 1));
          return Matrix(std::pow(s, -(p + b)) * jacobi_integral(g, p, b, s, 16));
        };
        const Matrix nested = jacobi_integral(inner, p + b, a, 1.3, 16);
        const Matrix direct = jacobi_integral(g, p, a + b, 1.3, 16);
        EXPECT_LE(testing::rel_error(nested, direct), 1e-9) << "a=" << a << " b=" << b;
      }
    }
  }
}

TEST(FracIntegral, ErrorPaths) {
  const auto f = dense(0.0, 1.0, [](double) { return one(); });
  EXPECT_THROW(frac_integral(f, 1.5, 1.5), Error);
  EXPECT_THROW(frac_integral(f, 1.5, 0.0), Error);
  EXPECT_THROW(frac_integral(f, 0.0, 0.5), Error);
  EXPECT_THROW(frac_integral(f, 1.5, 0.5, 2), Error);
  try {
    const auto bad = dense(-1.0, 1.0, [](double) { return one(); });
    frac_integral(bad, 1.5, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::non_integrable_singularity);
  }
  try {
    frac_integral(f, 1.5, 2.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::out_of_range);
  }
}

TEST(FracDerivative, AnnihilatesKernelFunctions) {
  for (double alpha : {1.25, 1.5, 1.75}) {
    const double c = 1.0 / std::tgamma(alpha);
    const auto f = dense(alpha - 1.0, 2.0, [c](double) { return Matrix(c * one()); });
    EXPECT_NEAR(std::abs(frac_derivative(f, alpha, 1.0)(0, 0)), 0.0, 1e-9) << alpha;
    const double c2 = 1.0 / std::tgamma(alpha - 1.0);
    const auto g = dense(alpha - 2.0, 2.0, [c2](double) { return Matrix(c2 * one()); });
    EXPECT_NEAR(std::abs(frac_derivative(g, alpha, 1.0)(0, 0)), 0.0, 1e-9) << alpha;
  }
}

TEST(FracDerivative, PowerRule) {
  const auto f = dense(0.0, 2.0, [](double t) { return Matrix(t * t * one()); });
  for (double t : {0.5, 1.0, 1.5}) {
    const double want = 2.0 / std::tgamma(1.5) * std::sqrt(t);
    EXPECT_NEAR(frac_derivative(f, 1.5, t)(0, 0).real(), want, 1e-7) << t;
  }
}

TEST(FracDerivative, ScalarFamilyDynamics) {
  const auto f = scalar_family(1.5, -2.0, 2.0);
  const Matrix d = frac_derivative(f, 1.5, 1.0);
  EXPECT_LE(std::abs(d(0, 0) - (-2.0) * f.value(1.0)(0, 0)), 1e-4);
}

TEST(FracDerivative, InvertsFractionalIntegral) {
  // g = J^alpha f for f = 1 + t + t^2, in closed form by the power rule.
  for (double alpha : {1.25, 1.5, 1.75}) {
    const RegularFn jg = [alpha](double t) {
      double v = 0.0;
      const double c[] = {1.0, 1.0, 1.0};
      for (int k = 0; k < 3; ++k) v += c[k] * std::tgamma(k + 1.0) / std::tgamma(k + 1.0 + alpha) * std::pow(t, k);
      return Matrix(v * one());
    };
    const auto g = dense(alpha, 2.0, jg);
    for (double t : {0.5, 1.0, 1.5}) {
      EXPECT_NEAR(frac_derivative(g, alpha, t)(0, 0).real(), 1.0 + t + t * t, 1e-6) << alpha << " " << t;
    }
  }
}

TEST(FracDerivative, StencilMustStayInside) {
  const auto f = dense(0.0, 1.0, [](double) { return one(); });
  try {
    frac_derivative(f, 1.5, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::out_of_range);
  }
  EXPECT_THROW(frac_derivative(f, 0.5, 0.5), Error);
  DerivativeOptions wide;
  wide.step = 0.6;
  EXPECT_THROW(frac_derivative(f, 1.5, 0.5, wide), Error);
}

TEST(ConvolveSingular, Constants) {
  const auto f = dense(0.0, 2.0, [](double) { return one(); });
  EXPECT_NEAR(convolve_singular(f, f, 1.0)(0, 0).real(), 1.0, 1e-14);
}

TEST(ConvolveSingular, PowerKernels) {
  for (double alpha : {1.25, 1.5, 1.75}) {
    const double c = 1.0 / std::tgamma(alpha - 1.0);
    const auto k = dense(alpha - 2.0, 2.0, [c](double) { return Matrix(c * one()); });
    // t^(a-2)/G(a-1) * t^(a-2)/G(a-1) = t^(2a-3)/G(2a-2)
    const double want = std::pow(1.5, 2.0 * alpha - 3.0) / std::tgamma(2.0 * alpha - 2.0);
    EXPECT_NEAR(convolve_singular(k, k, 1.5)(0, 0).real(), want, 1e-13 * std::abs(want)) << alpha;
  }
}

// Brute force: split at t/2, remove each endpoint power by s = c v^4, then a
// fine composite trapezoid rule.
Matrix trapezoid_convolution(const SingularTrajectory& f, const SingularTrajectory& g, double t) {
  const int n = 40000;
  const double c = 0.5 * t;
  Matrix total = Matrix::Zero(f.rows(), g.cols());
  for (int i = 0; i <= n; ++i) {
    const double v = static_cast<double>(i) / n;
    const double w = (i == 0 || i == n) ? 0.5 / n : 1.0 / n;
    const double s = c * std::pow(v, 4.0);
    const double jac = 4.0 * c * std::pow(v, 3.0);
    if (v == 0.0) continue;  // the transformed integrands vanish there for p > -3/4
    total += (w * jac * std::pow(s, g.exponent())) * (f.value(t - s) * g.regular(s));
    total += (w * jac * std::pow(s, f.exponent())) * (f.regular(s) * g.value(t - s));
  }
  return total;
}

TEST(ConvolveSingular, FamiliesCommuteAndMatchBruteForce) {
  const FracOrder order(1.5);
  const Generator gen = Generator::real(testing::rotation());
  std::vector<double> grid;
  for (int i = 1; i <= 32; ++i) grid.push_back(2.0 * i / 32.0);
  const auto T = sample_family(build_family(order, gen, FamilyKind::riemann_liouville), grid);
  const auto S = sample_family(build_family(order, gen, FamilyKind::caputo), grid);
  for (double t : {0.5, 1.0, 2.0}) {
    const Matrix ts = convolve_singular(T, S, t);
    const Matrix st = convolve_singular(S, T, t);
    EXPECT_LE((ts - st).norm(), 1e-8) << t;
    EXPECT_LE((ts - trapezoid_convolution(T, S, t)).norm(), 1e-7 * (1.0 + ts.norm())) << t;
  }
}

}  // namespace
}  // namespace rlfrac
