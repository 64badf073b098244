#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include "rlfrac/gamma.hpp"

namespace rlfrac {
namespace {

TEST(ReciprocalGamma, KnownValues) {
  EXPECT_NEAR(reciprocal_gamma(0.5), 1.0 / std::sqrt(std::numbers::pi), 1e-15);
  EXPECT_EQ(reciprocal_gamma(0.0), 0.0);
  EXPECT_NEAR(reciprocal_gamma(5.0), 1.0 / 24.0, 1e-17);
  EXPECT_DOUBLE_EQ(reciprocal_gamma(1.0), 1.0);
}

TEST(ReciprocalGamma, VanishesAtPoles) {
  for (int k = 0; k <= 40; ++k) {
    EXPECT_EQ(reciprocal_gamma(-static_cast<double>(k)), 0.0) << k;
    EXPECT_EQ(reciprocal_gamma(-static_cast<long double>(k)), 0.0L) << k;
    EXPECT_TRUE(is_gamma_pole(-static_cast<double>(k)));
  }
  EXPECT_FALSE(is_gamma_pole(-0.5));
  EXPECT_FALSE(is_gamma_pole(1.0));
}

TEST(ReciprocalGamma, MatchesBoostOnRandomArguments) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng);
    const long double ref = 1.0L / boost::math::tgamma(static_cast<long double>(x));
    const double got = reciprocal_gamma(x);
    EXPECT_LE(std::abs(got - static_cast<double>(ref)), 1e-13 * std::abs(static_cast<double>(ref)))
        << "x=" << x;
  }
}

TEST(ReciprocalGamma, FiniteBeyondGammaOverflow) {
  // Gamma(172.5) overflows; its reciprocal is subnormal but nonzero.
  EXPECT_FALSE(std::isfinite(std::tgamma(172.5)));
  const double r = reciprocal_gamma(172.5);
  EXPECT_GT(r, 0.0);
  EXPECT_NEAR(std::log(r), -std::lgamma(172.5), 1e-9);
  EXPECT_GT(reciprocal_gamma(1500.0L), 0.0L);
}

}  // namespace
}  // namespace rlfrac
