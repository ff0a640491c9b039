#include <benchmark/benchmark.h>

#include <random>

#include "bturan/canonical.hpp"
#include "bturan/constructions.hpp"
#include "bturan/cut.hpp"
#include "bturan/embedder.hpp"
#include "bturan/pattern_literal.hpp"
#include "bturan/tree_enum.hpp"

using namespace bturan;

namespace {

BipartiteGraph random_bipartite(int a, int b, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  BipartiteGraph g(a, b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace

static void BM_EmbeddingFound(benchmark::State& state) {
  const auto g = random_bipartite(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 0.5, 1);
  const auto p = parse_pattern_literal("D2,2").single();
  for (auto _ : state) benchmark::DoNotOptimize(find_embedding(g, p));
}
BENCHMARK(BM_EmbeddingFound)->Arg(8)->Arg(16)->Arg(32);

// Freeness proofs are the expensive direction: the search must exhaust.
static void BM_FreenessProof(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = build_construction(parse_construction("theta(" + std::to_string(n) + ")"));
  const auto p = parse_pattern_literal("D2,2").single();
  for (auto _ : state) benchmark::DoNotOptimize(contains(g, p));
}
BENCHMARK(BM_FreenessProof)->Arg(8)->Arg(16)->Arg(32);

static void BM_FamilyFreeness(benchmark::State& state) {
  const auto g = build_construction(parse_construction("disjoint_double_biclique(2,12,12)"));
  const PatternFamily f(TreesKL{3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(is_family_free(g, f));
}
BENCHMARK(BM_FamilyFreeness);

static void BM_CanonicalCode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = random_bipartite(n, n, 0.4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode)->Arg(4)->Arg(6)->Arg(8)->Arg(12);

static void BM_CanonicalRegular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = build_construction(parse_construction("circulant(" + std::to_string(n) + ",3)"));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalRegular)->Arg(6)->Arg(8)->Arg(10);

static void BM_FreeTrees(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(free_trees(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FreeTrees)->Arg(8)->Arg(10)->Arg(12);

static void BM_CutSwitching(benchmark::State& state) {
  const int v = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  std::bernoulli_distribution coin(0.5);
  GeneralGraph g(v);
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      if (coin(rng)) g.add_edge(a, b);
  for (auto _ : state) benchmark::DoNotOptimize(switch_to_large_cut(g));
}
BENCHMARK(BM_CutSwitching)->Arg(12)->Arg(24)->Arg(48);
