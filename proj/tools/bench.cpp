#include <benchmark/benchmark.h>

#include "bpm/exchange.hpp"
#include "bpm/kernels.hpp"
#include "bpm/sensitivity.hpp"

namespace {

using bpm::kernels::Exec;

Exec exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Exec::Serial : Exec::Parallel;
}

void BM_TruthTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bpm::kernels::bpm_star_truth_table(n, exec_of(state)));
}
BENCHMARK(BM_TruthTable)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Mobius(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto table = bpm::kernels::bpm_star_truth_table(n, Exec::Parallel);
  for (auto _ : state) {
    auto copy = table;
    bpm::kernels::mobius_transform(copy, exec_of(state));
    benchmark::DoNotOptimize(copy.data());
  }
}
BENCHMARK(BM_Mobius)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_FormulaTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bpm::kernels::formula_table(n, exec_of(state)));
}
BENCHMARK(BM_FormulaTable)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Sensitivity(benchmark::State& state) {
  const auto x = bpm::construct_path_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bpm::sensitivity_at(x, exec_of(state)));
}
BENCHMARK(BM_Sensitivity)->ArgsProduct({{8, 16}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_ReferenceValues(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int d = m / 4;
  std::vector<int> ref;
  for (int i = 0; i <= d; ++i) ref.push_back(static_cast<int>((static_cast<long>(m - 1) * i) / d));
  for (auto _ : state) benchmark::DoNotOptimize(bpm::exchange::reference_values(m, ref, exec_of(state)));
}
BENCHMARK(BM_ReferenceValues)->ArgsProduct({{1024, 4096}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
