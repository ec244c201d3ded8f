#include <benchmark/benchmark.h>

#include "rwgraph/rwgraph.hpp"

using namespace rwg;

namespace {

Element longest(Family f, int n) { return Element::longest(GroupSpec(f, n)); }

void BM_EnumerateA(benchmark::State& state) {
  auto w = longest(Family::A, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_words(w));
  state.counters["words"] = static_cast<double>(count_words(w));
}
BENCHMARK(BM_EnumerateA)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_BuildGraph(benchmark::State& state) {
  auto w = longest(state.range(0) ? Family::B : Family::A, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(w, BuildOptions{kDefaultVertexBudget, 1}));
}
BENCHMARK(BM_BuildGraph)->Args({0, 5})->Args({0, 6})->Args({1, 3})->Args({1, 4})->Unit(benchmark::kMillisecond);

void BM_Bfs(benchmark::State& state) {
  auto g = build_graph(longest(Family::A, static_cast<int>(state.range(0))));
  std::vector<int> dist;
  std::uint32_t src = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bfs_eccentricity(g, src, dist));
    src = (src + 7919) % static_cast<std::uint32_t>(g.vertex_count());
  }
  state.counters["vertices"] = static_cast<double>(g.vertex_count());
}
BENCHMARK(BM_Bfs)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_AllPairsDiameter(benchmark::State& state) {
  auto g = build_graph(longest(Family::B, 3));
  for (auto _ : state) benchmark::DoNotOptimize(diameter_all_pairs(g, 1));
}
BENCHMARK(BM_AllPairsDiameter)->Unit(benchmark::kMillisecond);

void BM_SeparationReference(benchmark::State& state) {
  auto words = enumerate_words(longest(Family::A, 5));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(separation(words[k % words.size()], words[(k * 31 + 5) % words.size()]));
    ++k;
  }
}
BENCHMARK(BM_SeparationReference);

void BM_SeparationSignature(benchmark::State& state) {
  auto g = build_graph(longest(Family::A, 5));
  std::uint32_t k = 0;
  auto n = static_cast<std::uint32_t>(g.vertex_count());
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.separation_size(k % n, (k * 31 + 5) % n));
    ++k;
  }
}
BENCHMARK(BM_SeparationSignature);

void BM_CanonicalWord(benchmark::State& state) {
  auto all = all_elements(GroupSpec(Family::B, 4));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_word(all[k++ % all.size()]));
}
BENCHMARK(BM_CanonicalWord);

}  // namespace

BENCHMARK_MAIN();
