#include <benchmark/benchmark.h>

#include "rlfrac/family.hpp"
#include "rlfrac/jacobi.hpp"
#include "rlfrac/mittag_leffler.hpp"
#include "rlfrac/verifier.hpp"

namespace {

using namespace rlfrac;

void BM_MLScalarSeries(benchmark::State& state) {
  const MittagLeffler ml({1.5, 0.5});
  const Complex z(-static_cast<double>(state.range(0)), 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(ml(z));
}
BENCHMARK(BM_MLScalarSeries)->Arg(1)->Arg(10)->Arg(40)->Arg(150);

void BM_MLTableBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(MittagLeffler({1.5, 0.5}).coefficient_count());
}
BENCHMARK(BM_MLTableBuild);

void BM_MLMatrix(benchmark::State& state) {
  const auto n = state.range(0);
  Eigen::MatrixXd a = Eigen::MatrixXd::Random(n, n);
  const Generator gen = Generator::real(a);
  const Generator series = Generator::real(a, Generator::Spectral::skip);
  const MittagLeffler ml({1.5, 0.5});
  const Generator& g = state.range(1) ? series : gen;
  for (auto _ : state) benchmark::DoNotOptimize(ml_matrix(ml, g));
}
BENCHMARK(BM_MLMatrix)->Args({2, 0})->Args({8, 0})->Args({2, 1})->Args({8, 1});

void BM_JacobiRule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_rule(n, -0.5, 0.25).weights.data());
}
BENCHMARK(BM_JacobiRule)->Arg(16)->Arg(64)->Arg(256);

void BM_CosineCheck(benchmark::State& state) {
  Eigen::MatrixXd rot(2, 2);
  rot << 0, 1, -1, 0;
  const FracOrder order(1.5);
  const auto fam = make_oracle(build_family(order, Generator::real(rot), FamilyKind::riemann_liouville));
  const std::vector<TimePair> pairs = {{0.5, 1.0}};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_cosine_equation(fam, order, pairs, {.quad_order = n}).rel_residual);
  }
}
BENCHMARK(BM_CosineCheck)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ResolventCheck(benchmark::State& state) {
  Eigen::MatrixXd rot(2, 2);
  rot << 0, 1, -1, 0;
  const FracOrder order(1.5);
  const auto fam = make_oracle(build_family(order, Generator::real(rot), FamilyKind::riemann_liouville));
  const auto pairs = default_pairs(1.5);
  for (auto _ : state) benchmark::DoNotOptimize(check_resolvent_equation(fam, order, pairs).rel_residual);
}
BENCHMARK(BM_ResolventCheck)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
