#include <benchmark/benchmark.h>

#include "gtsp/ddfacets.hpp"
#include "gtsp/decompose.hpp"
#include "gtsp/membership.hpp"

namespace {

using namespace gtsp;

void BM_Decompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Multigraph g = sample_eulerian_connected(n, 3 * n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
  state.counters["edges"] = g.edge_count();
}
BENCHMARK(BM_Decompose)->DenseRange(4, 10, 2);

void BM_MinkowskiMembership(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EdgeVector x = sample_eulerian_connected(n, n + 10, 3).to_edge_vector();
  generator_table(n);
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_membership(x));
}
BENCHMARK(BM_MinkowskiMembership)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

// Outside answers exercise Farkas extraction and normalization.
void BM_StspMembershipOutside(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EdgeVector x = sample_eulerian_connected(n, n + 6, 5).to_edge_vector();
  generator_table(n);
  for (auto _ : state) benchmark::DoNotOptimize(stsp_membership(x));
}
BENCHMARK(BM_StspMembershipOutside)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_PolarMembership(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  EdgeVector y{EdgeSpace(n)};
  for (const auto& t : enumerate_shortcut_triples(n)) y += shortcut_vector(t, y.space());
  for (auto _ : state) benchmark::DoNotOptimize(polar_membership(y));
}
BENCHMARK(BM_PolarMembership)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_DescribeQ(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(describe_Q(n));
}
BENCHMARK(BM_DescribeQ)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
