#include <cmath>

#include <gtest/gtest.h>

#include "rlfrac/error.hpp"
#include "rlfrac/verifier.hpp"
#include "test_support.hpp"

namespace rlfrac {
namespace {

FamilyOracle oracle_for(double alpha, const Eigen::MatrixXd& a, FamilyKind kind = FamilyKind::riemann_liouville) {
  return make_oracle(build_family(FracOrder(alpha), Generator::real(a), kind), "test");
}

std::vector<TimePair> square_pairs(std::initializer_list<double> times) {
  std::vector<TimePair> out;
  for (double t : times) {
    for (double s : times) out.emplace_back(t, s);
  }
  return out;
}

TEST(Report, FinalizeAndNormalize) {
  ResidualReport r;
  r.rel_residual = 1e-8;
  r.tolerance = 1e-8;
  r.finalize();
  EXPECT_TRUE(r.passed);
  r.rel_residual = 2e-8;
  r.finalize();
  EXPECT_FALSE(r.passed);
  EXPECT_DOUBLE_EQ(normalized_residual(1.0, 3.0, 1.0), 0.25);
}

TEST(Report, JsonRoundTrip) {
  ResidualReport r;
  r.check_id = "resolvent";
  r.family = "rl alpha=1.5";
  r.points = {{0.25, 0.5}, {1.0, 2.0}};
  r.abs_residual = 1.0 / 3.0;
  r.rel_residual = 0.1;
  r.tolerance = 1e-7;
  r.quadrature_order = 32;
  r.note = "x";
  r.finalize();
  const ResidualReport back = from_json_line(to_json_line(r));
  EXPECT_EQ(back.check_id, r.check_id);
  EXPECT_EQ(back.points, r.points);
  EXPECT_EQ(back.abs_residual, r.abs_residual);
  EXPECT_EQ(back.passed, r.passed);
  EXPECT_EQ(to_json_line(back), to_json_line(r));
  EXPECT_THROW(from_json_line("{not json"), Error);
}

TEST(Report, LogIsAppendOnly) {
  ReportLog log;
  EXPECT_TRUE(log.all_passed());
  ResidualReport ok;
  ok.check_id = "a";
  ok.tolerance = 1.0;
  ok.finalize();
  log.append(ok);
  ResidualReport bad = ok;
  bad.check_id = "b";
  bad.rel_residual = 2.0;
  bad.finalize();
  log.append(bad);
  ASSERT_EQ(log.reports().size(), 2u);
  EXPECT_EQ(log.reports()[0].check_id, "a");
  EXPECT_FALSE(log.all_passed());
}

TEST(DefaultPairs, Grid) {
  EXPECT_EQ(default_pairs(1.5).size(), 16u);
  EXPECT_EQ(default_pairs(1.1).size(), 15u);
}

TEST(Resolvent, ZeroGeneratorIsExact) {
  for (double alpha : {1.25, 1.5, 1.75}) {
    const auto rep = check_resolvent_equation(oracle_for(alpha, Eigen::MatrixXd::Zero(2, 2)),
                                              FracOrder(alpha), default_pairs(alpha));
    EXPECT_LE(rep.rel_residual, 1e-12) << alpha;
    EXPECT_TRUE(rep.passed);
    EXPECT_EQ(rep.check_id, "resolvent");
  }
}

TEST(Resolvent, ScalarFamily) {
  const auto pairs = square_pairs({0.25, 0.6, 1.1, 1.5, 2.0});
  const auto rep = check_resolvent_equation(oracle_for(1.5, testing::scalar(-1.0)), FracOrder(1.5), pairs);
  EXPECT_LE(rep.rel_residual, 1e-8);
  EXPECT_EQ(rep.points.size(), pairs.size());
}

TEST(Resolvent, SuiteFamiliesPass) {
  for (const Eigen::MatrixXd& a : {testing::diag12(), testing::rotation()}) {
    for (double alpha : {1.25, 1.5, 1.75}) {
      const auto rep = check_resolvent_equation(oracle_for(alpha, a), FracOrder(alpha), default_pairs(alpha));
      EXPECT_LE(rep.rel_residual, kResolventTolerance) << alpha;
    }
  }
}

TEST(Resolvent, CorruptedFamilyIsDetected) {
  for (const Eigen::MatrixXd& a : {Eigen::MatrixXd(Eigen::MatrixXd::Zero(2, 2)), testing::scalar(-1.0), testing::rotation()}) {
    for (double alpha : {1.25, 1.5, 1.75}) {
      const FracOrder order(alpha);
      const auto bad = corrupt(oracle_for(alpha, a), order, 1e-2);
      const auto rep = check_resolvent_equation(bad, order, default_pairs(alpha));
      EXPECT_GE(rep.rel_residual, 1e-3) << alpha;
      EXPECT_FALSE(rep.passed);
    }
  }
}

TEST(Resolvent, LinearCorruptionOfScalarFamily) {
  const FracOrder order(1.5);
  const auto bad = corrupt(oracle_for(1.5, testing::scalar(-1.0)), order, 1e-2, 1.0);
  EXPECT_GE(check_resolvent_equation(bad, order, default_pairs(1.5)).rel_residual, 1e-3);
}

TEST(Resolvent, QuadratureFallbackWithoutClosedForm) {
  const FracOrder order(1.5);
  auto fam = oracle_for(1.5, testing::rotation());
  const double closed = check_resolvent_equation(fam, order, default_pairs(1.5)).rel_residual;
  fam.jalpha = nullptr;
  const double quad = check_resolvent_equation(fam, order, default_pairs(1.5), {.quad_order = 64}).rel_residual;
  EXPECT_LE(closed, 1e-12);
  EXPECT_LE(quad, 1e-7);
}

TEST(Resolvent, RejectsEmptyPairsAndNonPositiveTimes) {
  const auto fam = oracle_for(1.5, testing::scalar(-1.0));
  EXPECT_THROW(check_resolvent_equation(fam, FracOrder(1.5), {}), Error);
  EXPECT_THROW(check_resolvent_equation(fam, FracOrder(1.5), {{0.0, 1.0}}), Error);
}

TEST(CaputoResolvent, ZeroGenerator) {
  const auto rep = check_caputo_resolvent(oracle_for(1.5, Eigen::MatrixXd::Zero(2, 2), FamilyKind::caputo),
                                          FracOrder(1.5), default_pairs(1.5));
  EXPECT_EQ(rep.abs_residual, 0.0);
}

TEST(CaputoResolvent, ScalarAndNearTwo) {
  const auto pairs = default_pairs(1.5);
  EXPECT_LE(check_caputo_resolvent(oracle_for(1.5, testing::scalar(-1.0), FamilyKind::caputo), FracOrder(1.5), pairs)
                .rel_residual,
            1e-8);
  EXPECT_LE(check_caputo_resolvent(oracle_for(1.99, testing::scalar(-1.0), FamilyKind::caputo), FracOrder(1.99), pairs)
                .rel_residual,
            1e-6);
  // Classical cosine identity the family approaches as alpha -> 2.
  const auto fam = oracle_for(1.99, testing::scalar(-1.0), FamilyKind::caputo);
  double worst = 0.0;
  for (const auto& [t, s] : pairs) {
    const double c = 2.0 * fam(t)(0, 0).real() * fam(s)(0, 0).real() - fam(t + s)(0, 0).real() -
                     fam.regular(std::abs(t - s))(0, 0).real();
    worst = std::max(worst, std::abs(c));
  }
  EXPECT_LE(worst, 0.2);
}

TEST(CaputoResolvent, RejectsRLFamily) {
  EXPECT_THROW(check_caputo_resolvent(oracle_for(1.5, testing::scalar(-1.0)), FracOrder(1.5), default_pairs(1.5)),
               Error);
}

}  // namespace
}  // namespace rlfrac
