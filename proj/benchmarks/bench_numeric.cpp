#include <benchmark/benchmark.h>

#include "tqasm/bethe_numeric.hpp"

namespace {

template <class Real>
void BM_RootsOfChi(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tqasm::roots_of_chi<Real>(m));
}
BENCHMARK_TEMPLATE(BM_RootsOfChi, double)->Arg(5)->Arg(10);
BENCHMARK_TEMPLATE(BM_RootsOfChi, long double)->Arg(10);
BENCHMARK_TEMPLATE(BM_RootsOfChi, tqasm::QuadFloat)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_TransferCheck(benchmark::State& state) {
  const auto rs = tqasm::roots_of_chi<double>(static_cast<int>(state.range(0)));
  const auto samples = tqasm::circle_samples<double>(20, 2.0, 20061);
  for (auto _ : state) benchmark::DoNotOptimize(tqasm::transfer_eigenvalue_check(rs, samples));
}
BENCHMARK(BM_TransferCheck)->Arg(10);

void BM_BetheVectorOracle(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto rs = tqasm::roots_of_chi<double>(m);
  for (auto _ : state) benchmark::DoNotOptimize(tqasm::bethe_vector_oracle(rs, 2 * m + 1));
}
BENCHMARK(BM_BetheVectorOracle)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
