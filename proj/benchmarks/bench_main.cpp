#include <benchmark/benchmark.h>

#include "efl/finish.hpp"
#include "efl/generators.hpp"
#include "efl/greedy.hpp"
#include "efl/hypercore.hpp"
#include "efl/nibble.hpp"
#include "efl/ordering.hpp"
#include "efl/pipeline.hpp"

using namespace efl;

static LinearHypergraph random_instance(int n, int m, uint64_t seed) {
  SizeLaw law;
  law.weights = {{2, 4.0}, {3, 3.0}, {4, 2.0}, {5, 1.0}};
  return random_linear(n, law, m, seed);
}

static void BM_LineGraph(benchmark::State& state) {
  auto H = random_instance((int)state.range(0), 3 * (int)state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(line_graph(H));
}
BENCHMARK(BM_LineGraph)->Arg(200)->Arg(1000);

static void BM_Pipeline(benchmark::State& state) {
  auto H = random_instance((int)state.range(0), 3 * (int)state.range(0), 2);
  Hierarchy h;
  for (auto _ : state) benchmark::DoNotOptimize(efl_color(H, h, 7));
}
BENCHMARK(BM_Pipeline)->Arg(200)->Arg(1000);

static void BM_Reorder(benchmark::State& state) {
  auto H = random_instance((int)state.range(0), 2 * (int)state.range(0), 3);
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(reorder(H, 0.5, 1.0));
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_Reorder)->Arg(100)->Arg(400);

static void BM_Vizing(benchmark::State& state) {
  auto Hk = complete_graph((int)state.range(0));
  SimpleGraph G;
  G.n = Hk.n;
  for (const auto& e : Hk.edges) G.edges.emplace_back(e[0], e[1]);
  for (auto _ : state) benchmark::DoNotOptimize(vizing(G));
}
BENCHMARK(BM_Vizing)->Arg(30)->Arg(80);

static void BM_PseudorandomMatching(benchmark::State& state) {
  auto H = uniform_near_regular(2000, 3, 60, 0.05, 5);
  std::vector<Vertex> V(2000);
  for (int i = 0; i < 2000; ++i) V[i] = i;
  for (auto _ : state)
    benchmark::DoNotOptimize(pseudorandom_matching(H, 0.2, 0.05, {V}, 9, 1));
}
BENCHMARK(BM_PseudorandomMatching);

BENCHMARK_MAIN();
