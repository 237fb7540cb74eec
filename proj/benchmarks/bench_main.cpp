#include <benchmark/benchmark.h>

#include "higgsmot/graded_series.hpp"
#include "higgsmot/pipeline.hpp"
#include "higgsmot/residues.hpp"

namespace {

using namespace higgsmot;

Exponent exponent_of(std::initializer_list<int> xs) {
  Exponent e{};
  std::size_t i = 0;
  for (int x : xs) e[i++] = x;
  return e;
}

void BM_RationalProductSum(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  std::vector<RationalFunction> factors;
  for (int k = 1; k <= n; ++k) factors.push_back(RationalFunction::inverse_one_minus(3, exponent_of({k, 1, k})));
  for (auto _ : state) {
    std::vector<RationalFunction> terms;
    RationalFunction acc = RationalFunction::constant(3, 1);
    for (const auto& f : factors) {
      acc *= f;
      terms.push_back(acc);
    }
    benchmark::DoNotOptimize(RationalFunction::sum(terms));
  }
}
BENCHMARK(BM_RationalProductSum)->Arg(3)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_ResidueSequential(benchmark::State& state) {
  const CurveModel c(static_cast<int>(state.range(0)));
  const Partition lambda({2, 1});
  l_mot(c, 3);
  for (auto _ : state) benchmark::DoNotOptimize(sequential_res_lambda(c, lambda));
}
BENCHMARK(BM_ResidueSequential)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ExpLog(benchmark::State& state) {
  const CurveModel c(1);
  const int d_max = static_cast<int>(state.range(0));
  GradedSeries f(3, d_max);
  for (int r = 0; r <= 3; ++r) {
    for (int d = 0; d <= d_max; ++d) {
      if (r + d > 0 && (r + 2 * d) % 3 == 0) f.set(r, d, c.class_of_x().scaled(r + d));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(log_pleth(exp_pleth(f)));
}
BENCHMARK(BM_ExpLog)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_HiggsTable(benchmark::State& state) {
  const CurveModel c(static_cast<int>(state.range(0)));
  const int r_max = static_cast<int>(state.range(1));
  for (auto _ : state) {
    clear_table_cache();
    benchmark::DoNotOptimize(higgs_table(c, r_max, 4 * r_max));
  }
}
BENCHMARK(BM_HiggsTable)->Args({0, 2})->Args({1, 2})->Args({2, 2})->Args({0, 3})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
