#include <benchmark/benchmark.h>

#include "homcx/classifier.hpp"
#include "homcx/e_f.hpp"
#include "homcx/graph.hpp"
#include "homcx/hom_poset.hpp"
#include "homcx/homology.hpp"
#include "homcx/walk.hpp"

using namespace homcx;

namespace {

// A long walk on C5 that zigzags, so reduction has real work to do.
Walk zigzag(const Graph& c5, std::size_t n) {
  std::vector<Vertex> v{0};
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex cur = v.back();
    v.push_back(i % 3 == 2 ? Vertex((cur + 4) % 5) : Vertex((cur + 1) % 5));
  }
  return Walk(c5, v);
}

void BM_Reduce(benchmark::State& state) {
  const Graph c5 = make_cycle(5);
  const auto w = zigzag(c5, std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Reduce)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_SquareFree(benchmark::State& state) {
  const Graph g = make_cycle(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_square_free(g));
}
BENCHMARK(BM_SquareFree)->Range(8, 4096);

void BM_EnumerateComponent(benchmark::State& state) {
  const Graph g = make_cycle(std::size_t(state.range(0))), c3 = make_cycle(3);
  std::vector<Vertex> fold;
  for (std::size_t i = 0; i < g.order(); ++i) fold.push_back(Vertex(i % 2));
  const GraphHom f(g, c3, fold);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_component(g, c3, f).size());
}
BENCHMARK(BM_EnumerateComponent)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_BettiNumbers(benchmark::State& state) {
  const Graph g = make_cycle(std::size_t(state.range(0))), c3 = make_cycle(3);
  std::vector<Vertex> fold;
  for (std::size_t i = 0; i < g.order(); ++i) fold.push_back(Vertex(i % 2));
  const auto k = order_complex(enumerate_component(g, c3, GraphHom(g, c3, fold)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(k, 3));
  state.counters["simplices"] = double(k.simplices.size());
}
BENCHMARK(BM_BettiNumbers)->DenseRange(4, 6, 2)->Unit(benchmark::kMillisecond);

void BM_ClassifyC6C3(benchmark::State& state) {
  const Graph c6 = make_cycle(6), c3 = make_cycle(3);
  for (auto _ : state) benchmark::DoNotOptimize(full_case_report(c6, c3).components.size());
}
BENCHMARK(BM_ClassifyC6C3)->Unit(benchmark::kMillisecond);

void BM_EfBounded(benchmark::State& state) {
  const Graph k2 = make_complete(2), c5 = make_cycle(5);
  const GraphHom f(k2, c5, {0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_Ef_bounded(f, std::size_t(state.range(0))).size());
}
BENCHMARK(BM_EfBounded)->DenseRange(4, 12, 4);

void BM_CoveringCheck(benchmark::State& state) {
  const Graph k2 = make_complete(2), c5 = make_cycle(5);
  const GraphHom f(k2, c5, {0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(check_poset_covering_local(f, 6).tested);
}
BENCHMARK(BM_CoveringCheck)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
