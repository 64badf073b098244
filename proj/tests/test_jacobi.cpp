#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "rlfrac/error.hpp"
#include "rlfrac/jacobi.hpp"

namespace rlfrac {
namespace {

double sum_weights(const JacobiRule& r) {
  double s = 0.0;
  for (double w : r.weights) s += w;
  return s;
}

TEST(JacobiRule, LegendreFivePoint) {
  const JacobiRule r = jacobi_rule(5, 0.0, 0.0);
  EXPECT_NEAR(sum_weights(r), 2.0, 1e-14);
  EXPECT_NEAR(r.nodes[2], 0.0, 1e-15);
  EXPECT_NEAR(r.nodes[4], std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0, 1e-14);
  EXPECT_NEAR(r.weights[2], 128.0 / 225.0, 1e-14);
}

TEST(JacobiRule, ChebyshevMass) {
  EXPECT_NEAR(sum_weights(jacobi_rule(8, -0.5, -0.5)), std::numbers::pi, 1e-13);
}

TEST(JacobiRule, SingularExponentsMass) {
  // a = 1 - alpha, b = alpha - 2 at alpha = 1.5: 2^0 B(1/2, 1/2) = pi.
  const JacobiRule r = jacobi_rule(10, -0.5, -0.5);
  EXPECT_NEAR(sum_weights(r), std::numbers::pi, 1e-13);
  EXPECT_NEAR(jacobi_moment(-0.5, 0.5), std::numbers::pi, 1e-14);
  EXPECT_NEAR(jacobi_moment(-0.25, -0.75), std::tgamma(0.75) * std::tgamma(0.25), 1e-13);
}

TEST(JacobiRule, NodesSortedInsideWeightsPositive) {
  for (int n : {1, 2, 7, 64, 256}) {
    const JacobiRule r = jacobi_rule(n, 0.3, -0.75);
    ASSERT_EQ(r.nodes.size(), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      EXPECT_GT(r.nodes[i], -1.0);
      EXPECT_LT(r.nodes[i], 1.0);
      EXPECT_GT(r.weights[i], 0.0);
      if (i > 0) {
        EXPECT_GT(r.nodes[i], r.nodes[i - 1]);
      }
    }
  }
}

// int (1-x)^a (1+x)^(b+j) dx = 2^(a+b+j+1) B(a+1, b+j+1): exact for j <= 2n-1.
TEST(JacobiRule, PolynomialExactnessProperty) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.95, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double a = u(rng);
    const double b = u(rng);
    const int n = 1 + trial % 12;
    const JacobiRule r = jacobi_rule(n, a, b);
    const double mass = jacobi_moment(a, b);
    EXPECT_NEAR(sum_weights(r), mass, 1e-12 * mass);
    for (int j = 0; j <= 2 * n - 1; ++j) {
      double got = 0.0;
      for (int i = 0; i < n; ++i) got += r.weights[i] * std::pow(1.0 + r.nodes[i], j);
      const double want = jacobi_moment(a, b + j);
      EXPECT_NEAR(got, want, 1e-12 * want) << "a=" << a << " b=" << b << " n=" << n << " j=" << j;
    }
  }
}

TEST(JacobiRule, RejectsNonIntegrableExponents) {
  try {
    jacobi_rule(4, -1.0, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_jacobi_exponent);
  }
  EXPECT_THROW(jacobi_rule(4, 0.0, -1.5), Error);
  EXPECT_THROW(jacobi_rule(0, 0.0, 0.0), Error);
}

TEST(JacobiRule, CacheReturnsSameRule) {
  const auto a = cached_jacobi_rule(16, -0.25, -0.75);
  const auto b = cached_jacobi_rule(16, -0.25, -0.75);
  EXPECT_EQ(a.get(), b.get());
  const JacobiRule fresh = jacobi_rule(16, -0.25, -0.75);
  EXPECT_EQ(a->nodes, fresh.nodes);
}

TEST(MappedRule, IntegratesShiftedWeight) {
  // int_1^3 (3-x)^0.5 (x-1)^-0.5 dx = 2 B(1.5, 0.5) = pi
  const auto m = map_rule(jacobi_rule(6, 0.5, -0.5), 1.0, 3.0);
  const double got = integrate(m, [](double) { return 1.0; });
  EXPECT_NEAR(got, std::numbers::pi, 1e-13);
}

}  // namespace
}  // namespace rlfrac
