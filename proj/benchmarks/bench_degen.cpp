#include <benchmark/benchmark.h>

#include "degen/degen.hpp"

namespace {

using namespace degen;

void BM_S2Triangle(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s2_triangle(rows));
}
BENCHMARK(BM_S2Triangle)->Arg(12)->Arg(24)->Arg(48);

void BM_S2Explicit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s2_explicit(n, n / 2));
}
BENCHMARK(BM_S2Explicit)->Arg(12)->Arg(24);

void BM_BernoulliNumbers(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli_numbers(n));
}
BENCHMARK(BM_BernoulliNumbers)->Arg(10)->Arg(20)->Arg(40);

void BM_EulerianExplicit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    for (std::size_t k = 0; k <= n; ++k) benchmark::DoNotOptimize(eulerian_poly_explicit(k));
  }
}
BENCHMARK(BM_EulerianExplicit)->Arg(10)->Arg(20);

void BM_EulerianRecurrence(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_polys_recurrence(n));
}
BENCHMARK(BM_EulerianRecurrence)->Arg(10)->Arg(20);

void BM_SeriesInverse(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const LambdaSeries s = (degenerate_exp(Rational{1}, order + 1) - LambdaSeries::one(order + 1)).shift_down(1);
  for (auto _ : state) benchmark::DoNotOptimize(s.inverse());
}
BENCHMARK(BM_SeriesInverse)->Arg(10)->Arg(30);

void BM_RunSuiteSmall(benchmark::State& state) {
  SuiteConfig config;
  config.alpha_max = 3;
  config.m_max = 5;
  config.n_max = 4;
  const BaseTables tables = BaseTables::build(required_rows(config));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(config, Suite::All, tables));
}
BENCHMARK(BM_RunSuiteSmall)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
