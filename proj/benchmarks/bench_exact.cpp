#include <benchmark/benchmark.h>

#include "tqasm/asm_numbers.hpp"
#include "tqasm/spin_sector.hpp"
#include "tqasm/symfun.hpp"
#include "tqasm/tq_solution.hpp"

namespace {

void BM_GroundCandidate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::size_t bits = 0;
  for (auto _ : state) {
    auto gc = tqasm::ground_candidate(n);
    bits = gc.stats.max_entry_bits;
    benchmark::DoNotOptimize(gc);
  }
  state.counters["max_entry_bits"] = static_cast<double>(bits);
}
BENCHMARK(BM_GroundCandidate)->DenseRange(9, 17, 2)->Unit(benchmark::kMillisecond);

void BM_OrbitDecompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tqasm::orbit_decompose(n, (n - 1) / 2));
}
BENCHMARK(BM_OrbitDecompose)->Arg(13)->Arg(17)->Unit(benchmark::kMillisecond);

void BM_BuildPhi(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tqasm::build_phi(m));
}
BENCHMARK(BM_BuildPhi)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_TqIdentity(benchmark::State& state) {
  const auto xi = tqasm::build_xi(tqasm::build_phi(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(tqasm::check_tq_identity(xi));
}
BENCHMARK(BM_TqIdentity)->Arg(4)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_ChiViaField(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tqasm::chi_via_field(m));
}
BENCHMARK(BM_ChiViaField)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_AsmRelation(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tqasm::check_asm_relation(m));
}
BENCHMARK(BM_AsmRelation)->Arg(10)->Arg(30);

}  // namespace
