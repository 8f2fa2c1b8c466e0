#include <benchmark/benchmark.h>

#include <cmath>

#include "cacherec/cacheopt.hpp"
#include "cacherec/netsim.hpp"
#include "cacherec/recopt.hpp"
#include "cacherec/synthetic.hpp"

namespace {

using namespace cacherec;

NetworkParams reference_params() {
  return {1.0, 2, 3.76, std::pow(10.0, -0.8)};
}

Vec zipf_popularity(int nf) {
  Vec pi(nf);
  double sum = 0.0;
  for (int f = 0; f < nf; ++f) {
    pi[f] = std::pow(f + 1.0, -0.8);
    sum += pi[f];
  }
  for (double& x : pi) x /= sum;
  return pi;
}

void BM_SirConstants(benchmark::State& state) {
  NetworkParams params = reference_params();
  for (auto _ : state) {
    params.sir_threshold = 0.1 + 1e-9 * state.iterations();
    benchmark::DoNotOptimize(sir_constants(params));
  }
}
BENCHMARK(BM_SirConstants);

void BM_OptimalCaching(benchmark::State& state) {
  const SirConstants k = sir_constants(reference_params());
  const int nf = static_cast<int>(state.range(0));
  const Vec pi = zipf_popularity(nf);
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_caching(pi, k, nf / 10));
  }
  state.SetComplexityN(nf);
}
BENCHMARK(BM_OptimalCaching)->Range(10, 1000)->Complexity();

void BM_GreedyJoint(benchmark::State& state) {
  const SirConstants k = sir_constants(reference_params());
  SyntheticSpec spec;
  spec.n_users = static_cast<int>(state.range(0));
  spec.n_contents = 50;
  spec.theta_max = 4.0 / 50.0;
  const UserPopulation pop = make_zipf_population(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_joint(pop, *pop.thresholds, k, 5, 3));
  }
  state.SetComplexityN(spec.n_users);
}
BENCHMARK(BM_GreedyJoint)->RangeMultiplier(2)->Range(2, 16)->Complexity();

void BM_SimulateOffload(benchmark::State& state) {
  DropConfig cfg;
  cfg.n_drops = state.range(0);
  cfg.cache_prob = 0.5;
  cfg.params = reference_params();
  cfg.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_offload(cfg));
  }
  state.SetItemsProcessed(state.iterations() * cfg.n_drops);
}
BENCHMARK(BM_SimulateOffload)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
