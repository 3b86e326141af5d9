#include <benchmark/benchmark.h>

#include "repst/bounds.hpp"
#include "repst/deligne.hpp"
#include "repst/groupalg.hpp"
#include "repst/schurweyl.hpp"
#include "repst/snoracle.hpp"
#include "repst/sweeps.hpp"

using namespace repst;

namespace {

Partition staircase(int k) {
  std::vector<int> rows;
  for (int r = k; r >= 1; --r) rows.push_back(r);
  return Partition(rows);
}

void BM_DimX(benchmark::State& state) {
  const Partition lambda = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dim_x(lambda));
}
BENCHMARK(BM_DimX)->DenseRange(2, 5);

void BM_MnCharacter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Partition mu = pad(staircase(3), n);
  const CycleType rho({1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(mn_character(mu, rho));
}
BENCHMARK(BM_MnCharacter)->RangeMultiplier(2)->Range(10, 40);

void BM_FrobCoefficient(benchmark::State& state) {
  const Partition lambda = staircase(static_cast<int>(state.range(0)));
  const CycleType rho({1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(frob_coefficient(lambda, rho));
}
BENCHMARK(BM_FrobCoefficient)->DenseRange(1, 3);

void BM_OmegaEigenvalue(benchmark::State& state) {
  const Partition lambda({2, 1, 1});
  const CycleType rho({0, 0, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(omega_eigenvalue(rho, lambda));
}
BENCHMARK(BM_OmegaEigenvalue);

void BM_TensorPowerHilbert(benchmark::State& state) {
  const UnitalHilbert h({1, 2, 1, 3});
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tensor_power_hilbert(h, degree));
}
BENCHMARK(BM_TensorPowerHilbert)->DenseRange(4, 12, 4);

void BM_StirlingCoefficient(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stirling_hilbert_coeff(m));
}
BENCHMARK(BM_StirlingCoefficient)->DenseRange(2, 8, 2);

void BM_BoundSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bound_sweep(n));
}
BENCHMARK(BM_BoundSweep)->DenseRange(12, 24, 6);

void BM_CentralOracleSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(central_oracle_sweep(4, 5, 10));
}
BENCHMARK(BM_CentralOracleSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
