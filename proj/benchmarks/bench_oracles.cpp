#include <benchmark/benchmark.h>

#include <random>

#include "cpeb/decision_class.hpp"
#include "cpeb/env.hpp"
#include "cpeb/fc.hpp"
#include "cpeb/generators.hpp"
#include "cpeb/oracles.hpp"

namespace {

using namespace cpeb;

WeightVector jittered_means(const Instance& instance, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 0.05);
  WeightVector v = instance.means;
  for (double& w : v) w += noise(rng);
  return v;
}

void BM_MaxOraclePath85(benchmark::State& state) {
  const Instance instance = make_path_instance(0.5);
  const auto cls = make_decision_class(instance);
  const WeightVector v = jittered_means(instance, 1);
  for (auto _ : state) benchmark::DoNotOptimize(cls->max_oracle(v));
}

void BM_MaxOracleExcludingPath85(benchmark::State& state) {
  const Instance instance = make_path_instance(0.5);
  const auto cls = make_decision_class(instance);
  const WeightVector v = jittered_means(instance, 2);
  const SuperArm best = *cls->max_oracle(instance.means);
  for (auto _ : state)
    benchmark::DoNotOptimize(max_oracle_excluding(*cls, best, v));
}

void BM_BottleneckSearchPath85(benchmark::State& state) {
  const Instance instance = make_path_instance(0.5);
  const auto cls = make_decision_class(instance);
  const WeightVector v = jittered_means(instance, 3);
  const SuperArm best = *cls->max_oracle(instance.means);
  for (auto _ : state)
    benchmark::DoNotOptimize(bottleneck_search(*cls, best, v));
}

void BM_ArOracleMatching(benchmark::State& state) {
  const Instance instance = make_matching_instance(0.05);
  const auto cls = make_decision_class(instance);
  const WeightVector v = jittered_means(instance, 4);
  ArOracleQuery query{0, ArmMask(static_cast<std::size_t>(instance.n), 0)};
  query.rejected[5] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(ar_oracle(*cls, query, v));
}

void BM_BlucbDiamondTrial(benchmark::State& state) {
  const Instance instance = make_diamond_instance(1.0);
  const auto cls = make_decision_class(instance);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Environment env(instance, seed++);
    benchmark::DoNotOptimize(blucb(env, *cls, Confidence::from_delta(0.05)));
  }
}

}  // namespace

BENCHMARK(BM_MaxOraclePath85);
BENCHMARK(BM_MaxOracleExcludingPath85);
BENCHMARK(BM_BottleneckSearchPath85);
BENCHMARK(BM_ArOracleMatching);
BENCHMARK(BM_BlucbDiamondTrial);

BENCHMARK_MAIN();
