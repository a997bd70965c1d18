#include <doctest.h>

#include <random>

#include "cpeb/decision_class.hpp"
#include "cpeb/fc.hpp"
#include "cpeb/gen.hpp"
#include "cpeb/generators.hpp"

using namespace cpeb;

namespace {

std::shared_ptr<const DecisionClass> top_k_class(int n, int k) {
  DecisionClassSpec spec;
  spec.kind = ClassKind::TopK;
  spec.k = k;
  return make_decision_class(spec, n);
}

}  // namespace

TEST_CASE("shipped rewards are monotone and sup-norm Lipschitz") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> base(0.0, 2.0);
  std::uniform_real_distribution<double> bump(0.0, 0.5);
  const RewardFunction bottleneck = make_bottleneck_reward();
  const RewardFunction linear = make_linear_reward(3.0);
  const RewardFunction quadratic = make_quadratic_reward(3.0, 2.0 * 3.0 * 3.0);
  const SuperArm m({0, 2, 4});
  for (int round = 0; round < 400; ++round) {
    WeightVector lo(5), hi(5);
    for (int i = 0; i < 5; ++i) {
      lo[static_cast<std::size_t>(i)] = base(rng);
      hi[static_cast<std::size_t>(i)] =
          lo[static_cast<std::size_t>(i)] + bump(rng);
    }
    double max_diff = 0.0;
    for (int e : m.arms())
      max_diff = std::max(max_diff, hi[static_cast<std::size_t>(e)] -
                                        lo[static_cast<std::size_t>(e)]);
    for (const RewardFunction* f : {&bottleneck, &linear, &quadratic}) {
      const double at_lo = f->value(m, lo);
      const double at_hi = f->value(m, hi);
      CHECK(at_lo <= at_hi);
      CHECK(at_hi - at_lo <= f->lipschitz_u * max_diff + 1e-12);
    }
  }
}

TEST_CASE("genlucb with the bottleneck reward matches blucb on the diamond") {
  const Instance instance = make_diamond_instance(0.0);
  const auto cls = make_decision_class(instance);
  Environment env(instance, 4);
  const FcResult result = genlucb(env, *cls, make_bottleneck_reward(),
                                  Confidence::from_delta(0.05));
  CHECK(result.answer == SuperArm({0, 1}));
  CHECK(result.total_pulls == 4);
}

TEST_CASE("genlucb with the linear reward finds the best pair") {
  Instance instance;
  instance.n = 3;
  instance.means = {3.0, 1.0, 2.0};
  instance.noise_scale = 0.0;
  instance.class_spec.kind = ClassKind::TopK;
  instance.class_spec.k = 2;
  Environment env(instance, 5);
  const auto cls = top_k_class(3, 2);
  const FcResult result = genlucb(env, *cls, make_linear_reward(2.0),
                                  Confidence::from_delta(0.05));
  CHECK(result.answer == SuperArm({0, 2}));
  CHECK(result.total_pulls == 3);
}

TEST_CASE("genlucb matches blucb answers under concentration on matched seeds") {
  const Instance instance = make_diamond_instance(1.0);
  const auto cls = make_decision_class(instance);
  for (std::uint64_t seed = 40; seed < 52; ++seed) {
    Environment gen_env(instance, seed);
    GenOptions gen_options;
    gen_options.true_means = &instance.means;
    const FcResult general = genlucb(gen_env, *cls, make_bottleneck_reward(),
                                     Confidence::from_delta(0.05), gen_options);
    Environment blucb_env(instance, seed);
    FcOptions options;
    options.true_means = &instance.means;
    const FcResult baseline =
        blucb(blucb_env, *cls, Confidence::from_delta(0.05), options);
    if (general.concentration_held && baseline.concentration_held)
      CHECK(general.answer == baseline.answer);
  }
}

TEST_CASE("genlucb respects the enumeration cap") {
  const Instance instance = make_diamond_instance(1.0);
  const auto cls = make_decision_class(instance);
  Environment env(instance, 6);
  GenOptions options;
  options.enumeration_cap = 1;
  CHECK_THROWS_AS(genlucb(env, *cls, make_bottleneck_reward(),
                          Confidence::from_delta(0.05), options),
                  CapacityError);
}
