#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "cuspdens/beltsum.hpp"
#include "cuspdens/chain.hpp"
#include "cuspdens/constants.hpp"
#include "cuspdens/horoball.hpp"
#include "cuspdens/registry.hpp"

namespace {

void BM_Lobachevsky(benchmark::State& state) {
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cusp::lobachevsky(theta));
    theta += 1e-3;
    if (theta > std::numbers::pi) theta = 0.1;
  }
}
BENCHMARK(BM_Lobachevsky);

cusp::ChainGraph path_forest(std::size_t n) {
  std::mt19937_64 rng(3);
  cusp::ChainGraph g;
  for (std::size_t i = 0; i < n; ++i) {
    g.add_vertex("A" + std::to_string(i), static_cast<long long>(rng() % 7));
    if (i > 0) g.add_edge(rng() % i, i);
  }
  return g;
}

void BM_FillChain(benchmark::State& state) {
  const cusp::ChainGraph g = path_forest(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cusp::fill_chain(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FillChain)->RangeMultiplier(10)->Range(10, 100000)->Complexity();

void BM_SampleParameters(benchmark::State& state) {
  const cusp::TangleLinkData high =
      cusp::tangle_data(cusp::Registry::bundled().geometry("F2_limit"));
  const cusp::TangleLinkData low = cusp::daisy_chain_proxy(1e5);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> y(0.01, 0.68);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cusp::sample_parameters(high, low, y(rng), 1e-9));
  }
}
BENCHMARK(BM_SampleParameters);

void BM_SearchPackingMax(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cusp::search_packing_max(1, state.range(0)));
  }
}
BENCHMARK(BM_SearchPackingMax)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
