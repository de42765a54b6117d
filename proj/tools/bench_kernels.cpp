// Serial reference vs OpenMP kernels on dense tables of random graphs.

#include "linwidth/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace linwidth;

namespace {

std::vector<WeightedLink> random_links(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<WeightedLink> links;
  for (Element u = 0; u < n; ++u) {
    for (Element v = u + 1; v < n; ++v) {
      if (rng() % 2 == 0) links.push_back({u, v, 1 + rng() % 3});
    }
  }
  return links;
}

std::vector<Value> table(std::size_t n) { return kernels::serial::vertex_cut_table(random_links(n, 42), n); }

template <Exec E>
void vertex_cut(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto links = random_links(n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::vertex_cut_table(links, n, E));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

template <Exec E>
void scan_axioms(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = table(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::scan_axioms(t, n, ReportMode::first, E));
}

template <Exec E>
void prefix_bottleneck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = table(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::prefix_bottleneck(t, n, E));
}

template <Exec E>
void completable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = table(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::completable(t, n, n, E));
}

}  // namespace

BENCHMARK(vertex_cut<Exec::serial>)->DenseRange(12, 20, 4);
BENCHMARK(vertex_cut<Exec::parallel>)->DenseRange(12, 20, 4);
BENCHMARK(scan_axioms<Exec::serial>)->DenseRange(6, 10, 2);
BENCHMARK(scan_axioms<Exec::parallel>)->DenseRange(6, 10, 2);
BENCHMARK(prefix_bottleneck<Exec::serial>)->DenseRange(12, 20, 4);
BENCHMARK(prefix_bottleneck<Exec::parallel>)->DenseRange(12, 20, 4);
BENCHMARK(completable<Exec::serial>)->DenseRange(12, 20, 4);
BENCHMARK(completable<Exec::parallel>)->DenseRange(12, 20, 4);

BENCHMARK_MAIN();
