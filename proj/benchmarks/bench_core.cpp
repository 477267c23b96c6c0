#include <benchmark/benchmark.h>

#include <random>

#include "evoalg/bounds.hpp"
#include "evoalg/generators.hpp"
#include "evoalg/morphisms.hpp"
#include "evoalg/rank.hpp"

using namespace evoalg;

static void BM_adjacency_rank_cycle(benchmark::State& state) {
  FiniteGraph g = make_cycle(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(adjacency_rank(g));
  }
}
BENCHMARK(BM_adjacency_rank_cycle)->Range(8, 512);

static void BM_product_random(benchmark::State& state) {
  Graph g(make_cycle(state.range(0)));
  const EvolutionAlgebra alg{g, AlgebraKind::RandomWalk};
  std::mt19937_64 rng(1);
  std::vector<VertexId> pool = vertex_pool(g, std::nullopt);
  const SparseVector v = random_sparse_vector(rng, pool);
  const SparseVector w = random_sparse_vector(rng, pool);
  for (auto _ : state) {
    benchmark::DoNotOptimize(product(alg, v, w));
  }
}
BENCHMARK(BM_product_random)->Range(16, 4096);

static void BM_twin_partition(benchmark::State& state) {
  FiniteGraph g = make_complete_bipartite(state.range(0), state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(twin_partition(g));
  }
}
BENCHMARK(BM_twin_partition)->Range(4, 64);

static void BM_truncate_periodic_tree(benchmark::State& state) {
  for (auto _ : state) {
    LazyGraph t = make_spherically_symmetric_tree({2, 3});
    benchmark::DoNotOptimize(truncate(t, state.range(0)));
  }
}
BENCHMARK(BM_truncate_periodic_tree)->DenseRange(4, 16, 4);

static void BM_decide_isomorphism(benchmark::State& state) {
  FiniteGraph g = make_cycle(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_isomorphism(g));
  }
}
BENCHMARK(BM_decide_isomorphism)->Range(8, 256);

BENCHMARK_MAIN();
