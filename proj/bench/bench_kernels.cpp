#include <benchmark/benchmark.h>

#include <random>

#include "lpa/generate.hpp"
#include "lpa/kernels.hpp"
#include "lpa/lattice.hpp"

namespace {

using namespace lpa;

Graph bench_graph(std::size_t n) {
  std::mt19937_64 rng(n);
  GraphGenOptions o;
  o.min_vertices = o.max_vertices = n;
  o.edge_probability = 1.5 / static_cast<double>(n);
  return random_graph(rng, o);
}

// n isolated vertices: every subset is hereditary saturated.
Graph discrete_graph(std::size_t n) {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i) vs.emplace_back(1, static_cast<char>('a' + i));
  return Graph(vs, {});
}

void BM_HsSerial(benchmark::State& state) {
  const auto m = kernels::to_masks(bench_graph(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::hereditary_saturated_masks_serial(m));
}
void BM_HsParallel(benchmark::State& state) {
  const auto m = kernels::to_masks(bench_graph(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::hereditary_saturated_masks_parallel(m));
}
BENCHMARK(BM_HsSerial)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_HsParallel)->Arg(12)->Arg(16)->Arg(20);

std::vector<AdmissiblePair> pairs_of(std::size_t n) {
  PairLatticeOptions o;
  o.parallel = false;
  return PairLattice(discrete_graph(n), o).elements();
}

void BM_OrderSerial(benchmark::State& state) {
  const auto p = pairs_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::order_matrix_serial(p));
}
void BM_OrderParallel(benchmark::State& state) {
  const auto p = pairs_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::order_matrix_parallel(p));
}
BENCHMARK(BM_OrderSerial)->Arg(6)->Arg(8);
BENCHMARK(BM_OrderParallel)->Arg(6)->Arg(8);

void BM_LubSerial(benchmark::State& state) {
  const auto p = pairs_of(static_cast<std::size_t>(state.range(0)));
  const auto order = kernels::order_matrix_serial(p);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::lub_table_serial(order, p.size()));
}
void BM_LubParallel(benchmark::State& state) {
  const auto p = pairs_of(static_cast<std::size_t>(state.range(0)));
  const auto order = kernels::order_matrix_serial(p);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::lub_table_parallel(order, p.size()));
}
BENCHMARK(BM_LubSerial)->Arg(6)->Arg(8);
BENCHMARK(BM_LubParallel)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
