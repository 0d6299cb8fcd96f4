// Serial reference vs OpenMP kernels on the hot checks. Not a test; run
// build/bench_kernels directly.

#include <benchmark/benchmark.h>

#include "fixtures.hpp"

using namespace csa;

namespace {

kernels::Execution mode_of(const benchmark::State& state) {
  return state.range(1) == 0 ? kernels::Execution::Serial : kernels::Execution::Parallel;
}

// Center-symmetric inputs force a full scan (no early exit): blocks of 2x2
// matrices padded with a truncated polynomial ring, in a random basis.
Algebra cs_fixture(std::size_t n) {
  SplitMix64 rng(n);
  Algebra a = fixtures::truncated_polynomial(n % 4);
  while (a.dim() < n) a = fixtures::direct_product(a, fixtures::matrices2());
  return fixtures::change_basis(a, fixtures::random_invertible(n, rng));
}

void BM_CenterSymmetric(benchmark::State& state) {
  const Algebra a = cs_fixture(static_cast<std::size_t>(state.range(0)));
  kernels::ScopedExecution mode(mode_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(check_center_symmetric(a).pass);
}

void BM_OperatorIdentities(benchmark::State& state) {
  const Algebra a = cs_fixture(static_cast<std::size_t>(state.range(0)));
  kernels::ScopedExecution mode(mode_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(check_operator_identities(a).verdict());
}

void BM_Cocycle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Algebra a = cs_fixture(n);
  kernels::ScopedExecution mode(mode_of(state));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cocycle_check_direct(commutator_tensor(a), T3::cube(n)).pass);
  }
}

void BM_Enumerate(benchmark::State& state) {
  SearchSpec s;
  s.dim = 2;
  s.filters.center_symmetric = true;
  kernels::ScopedExecution mode(mode_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_structures(s).size());
}

}  // namespace

BENCHMARK(BM_CenterSymmetric)->ArgsProduct({{4, 8, 12}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OperatorIdentities)->ArgsProduct({{4, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Cocycle)->ArgsProduct({{4, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->ArgsProduct({{2}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
