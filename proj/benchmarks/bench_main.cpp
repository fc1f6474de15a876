#include <random>

#include <benchmark/benchmark.h>

#include "hermitia/classify.hpp"
#include "hermitia/families.hpp"
#include "hermitia/spectra.hpp"
#include "hermitia/suites.hpp"
#include "hermitia/switching.hpp"

namespace {

using namespace hermitia;

std::vector<QuartGainGraph> sample(std::size_t n, int count) {
  std::mt19937_64 rng(kDefaultSeed);
  std::vector<QuartGainGraph> out;
  for (int t = 0; t < count; ++t) {
    out.push_back(random_gain_graph(rng, n, 0.5, false));
  }
  return out;
}

void BM_InertiaExact(benchmark::State& state) {
  const auto graphs = sample(static_cast<std::size_t>(state.range(0)), 32);
  std::vector<HermitianMatrix> mats;
  for (const auto& g : graphs) {
    mats.push_back(hermitian_matrix(g));
  }
  std::size_t j = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inertia_exact(mats[j++ % mats.size()]));
  }
}
BENCHMARK(BM_InertiaExact)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

void BM_EigFloat(benchmark::State& state) {
  const auto graphs = sample(static_cast<std::size_t>(state.range(0)), 32);
  std::vector<HermitianMatrix> mats;
  for (const auto& g : graphs) {
    mats.push_back(hermitian_matrix(g));
  }
  std::size_t j = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_float(mats[j++ % mats.size()]));
  }
}
BENCHMARK(BM_EigFloat)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

void BM_TreeNormalize(benchmark::State& state) {
  const auto graphs = sample(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t j = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tree_normalize(graphs[j++ % graphs.size()]));
  }
}
BENCHMARK(BM_TreeNormalize)->Arg(10)->Arg(40)->Arg(160);

void BM_ClassifyInertiaTwo(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(kDefaultSeed);
  const QuartGainGraph base = gen_K_gain({m, 1, m}, {m, 1, m + 1, 1}, 2, 0, 1, 0);
  const QuartGainGraph g = apply_switch(base, random_switch(rng, base.order()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(thm12_classify(g));
  }
}
BENCHMARK(BM_ClassifyInertiaTwo)->Arg(1)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
