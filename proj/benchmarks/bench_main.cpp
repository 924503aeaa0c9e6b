#include <benchmark/benchmark.h>

#include "homometry/homometry.hpp"

using namespace homometry;

namespace {

MixedMeasure dense_comb(std::int64_t n) {
  std::vector<CAmp> w(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = CAmp(1.0 + (j % 3), (j % 5) - 2.0);
  return comb(Rat(1, n), std::move(w));
}

void BM_Diffraction(benchmark::State& state) {
  const MixedMeasure m = dense_comb(state.range(0)) + lebesgue(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(diffraction(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Diffraction)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_CommonRefinement(benchmark::State& state) {
  const MixedMeasure a = dense_comb(state.range(0));
  const MixedMeasure b = lattice_comb(Rat(1, state.range(0) + 1));
  for (auto _ : state) benchmark::DoNotOptimize(add(a, b));
}
BENCHMARK(BM_CommonRefinement)->RangeMultiplier(4)->Range(4, 256);

void BM_PartialSum(benchmark::State& state) {
  const FormalCombSeries s = pd_formal_fourier(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(series_partial_sum(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PartialSum)->DenseRange(2, 8, 2);

void BM_GaussianPairing(benchmark::State& state) {
  const FormalCombSeries s = pd_formal_fourier(0.25);
  const double sigma = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pair_with_gaussian(s, 0.1, sigma));
}
BENCHMARK(BM_GaussianPairing)->Arg(1)->Arg(10)->Arg(100);

void BM_WindowOracle(benchmark::State& state) {
  const MixedMeasure m = lebesgue(2.0) - lattice_comb();
  for (auto _ : state) benchmark::DoNotOptimize(compare_with_exact(m, Rat(state.range(0))));
}
BENCHMARK(BM_WindowOracle)->Arg(100)->Arg(1000);

void BM_SolveTable(benchmark::State& state) {
  const ResidueClasses rule{4, {Turn(Rat(0)), Turn(Rat(1, 4)), Turn(Rat(1, 2)), Turn(Rat(-1, 4))}};
  for (auto _ : state) benchmark::DoNotOptimize(solve(lattice_comb(), rule));
}
BENCHMARK(BM_SolveTable);

}  // namespace
BENCHMARK_MAIN();
