#include <doctest.h>

#include "cpeb/analysis.hpp"
#include "cpeb/decision_class.hpp"
#include "cpeb/fc.hpp"
#include "cpeb/generators.hpp"

using namespace cpeb;

namespace {

struct DiamondFixture {
  Instance instance;
  std::shared_ptr<const DecisionClass> cls;

  explicit DiamondFixture(double noise = 1.0)
      : instance(make_diamond_instance(noise)),
        cls(make_decision_class(instance)) {}
};

const SuperArm kDiamondBest({0, 1});

std::shared_ptr<const DecisionClass> single_super_arm_class() {
  DecisionClassSpec spec;
  spec.kind = ClassKind::TopK;
  spec.k = 2;
  return make_decision_class(spec, 2);
}

}  // namespace

TEST_CASE("blucb stops right after initialization at zero noise") {
  DiamondFixture fx(0.0);
  Environment env(fx.instance, 1);
  const FcResult result = blucb(env, *fx.cls, Confidence::from_delta(0.05));
  CHECK(result.answer == kDiamondBest);
  CHECK(result.total_pulls == 4);
  CHECK(result.pulls_per_arm == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("blucb is correct on noisy diamonds and sound under concentration") {
  DiamondFixture fx;
  int wrong = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Environment env(fx.instance, 100 + static_cast<std::uint64_t>(trial));
    FcOptions options;
    options.true_means = &fx.instance.means;
    const FcResult result =
        blucb(env, *fx.cls, Confidence::from_delta(0.05), options);
    CHECK(result.total_pulls ==
          result.pulls_per_arm[0] + result.pulls_per_arm[1] +
              result.pulls_per_arm[2] + result.pulls_per_arm[3]);
    if (result.answer != kDiamondBest) ++wrong;
    if (result.concentration_held) CHECK(result.answer == kDiamondBest);
  }
  CHECK(wrong <= 2);
}

TEST_CASE("blucb single-super-arm class returns immediately") {
  Instance instance;
  instance.n = 2;
  instance.means = {0.2, 0.6};
  instance.noise_scale = 1.0;
  instance.class_spec.kind = ClassKind::TopK;
  instance.class_spec.k = 2;
  Environment env(instance, 3);
  const auto cls = single_super_arm_class();
  const FcResult result = blucb(env, *cls, Confidence::from_delta(0.1));
  CHECK(result.answer == SuperArm({0, 1}));
  CHECK(result.total_pulls == 2);
}

TEST_CASE("relaxed stopping never pulls more on matched seeds") {
  DiamondFixture fx;
  for (std::uint64_t seed = 20; seed < 30; ++seed) {
    Environment exact_env(fx.instance, seed);
    const FcResult exact =
        blucb(exact_env, *fx.cls, Confidence::from_delta(0.05));
    Environment relaxed_env(fx.instance, seed);
    FcOptions relaxed_options;
    relaxed_options.epsilon = 0.4;
    const FcResult relaxed = blucb(relaxed_env, *fx.cls,
                                   Confidence::from_delta(0.05), relaxed_options);
    CHECK(relaxed.total_pulls <= exact.total_pulls);
  }
}

TEST_CASE("blucb_explore at zero noise returns the rival gate immediately") {
  DiamondFixture fx(0.0);
  Environment env(fx.instance, 5);
  const ExploreResult result = blucb_explore(env, *fx.cls, 0.01);
  CHECK(result.hypothesized_best == kDiamondBest);
  CHECK(result.near_bottleneck_set == std::vector<int>{3});
  CHECK(result.total_pulls == 4);
}

TEST_CASE("blucb_explore on a single-super-arm class returns an empty set") {
  Instance instance;
  instance.n = 2;
  instance.means = {0.2, 0.6};
  instance.noise_scale = 1.0;
  instance.class_spec.kind = ClassKind::TopK;
  instance.class_spec.k = 2;
  Environment env(instance, 8);
  const ExploreResult result =
      blucb_explore(env, *single_super_arm_class(), 0.01);
  CHECK(result.hypothesized_best == SuperArm({0, 1}));
  CHECK(result.near_bottleneck_set.empty());
  CHECK(result.total_pulls == 2);
}

TEST_CASE("blucb_explore mostly guesses right at kappa=0.01") {
  DiamondFixture fx;
  int right = 0;
  const int trials = 60;
  for (int trial = 0; trial < trials; ++trial) {
    Environment env(fx.instance, 400 + static_cast<std::uint64_t>(trial));
    if (blucb_explore(env, *fx.cls, 0.01).hypothesized_best == kDiamondBest)
      ++right;
  }
  CHECK(right >= trials - 2);
}

TEST_CASE("blucb_verify at zero noise uses both initializations only") {
  DiamondFixture fx(0.0);
  Environment env(fx.instance, 6);
  const FcResult result =
      blucb_verify(env, *fx.cls, Confidence::from_delta(0.005));
  CHECK(result.answer == kDiamondBest);
  CHECK(result.total_pulls == 8);
}

TEST_CASE("blucb_verify and blucb_parallel are correct on noisy diamonds") {
  DiamondFixture fx;
  int verify_wrong = 0;
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    Environment env(fx.instance, seed);
    if (blucb_verify(env, *fx.cls, Confidence::from_delta(0.005)).answer !=
        kDiamondBest)
      ++verify_wrong;
  }
  CHECK(verify_wrong <= 1);  // 0.005 + explore's 0.01, with slack

  int parallel_wrong = 0;
  for (std::uint64_t seed = 300; seed < 325; ++seed) {
    Environment env(fx.instance, seed);
    if (blucb_parallel(env, *fx.cls, Confidence::from_delta(0.005)).answer !=
        kDiamondBest)
      ++parallel_wrong;
  }
  CHECK(parallel_wrong == 0);
}

TEST_CASE("uniform_fc is correct across noisy trials") {
  DiamondFixture fx;
  int wrong = 0;
  for (std::uint64_t seed = 500; seed < 530; ++seed) {
    Environment env(fx.instance, seed);
    if (uniform_fc(env, *fx.cls, Confidence::from_delta(0.05)).answer !=
        kDiamondBest)
      ++wrong;
  }
  CHECK(wrong <= 1);
}

TEST_CASE("blucb_verify with no competitor stops right after its own init") {
  Instance instance;
  instance.n = 2;
  instance.means = {0.2, 0.6};
  instance.noise_scale = 1.0;
  instance.class_spec.kind = ClassKind::TopK;
  instance.class_spec.k = 2;
  Environment env(instance, 14);
  const FcResult result =
      blucb_verify(env, *single_super_arm_class(), Confidence::from_delta(0.005));
  CHECK(result.answer == SuperArm({0, 1}));
  CHECK(result.total_pulls == 4);  // explore init + verify init
}

TEST_CASE("relaxed stopping carries through the interleaved variant") {
  DiamondFixture fx;
  for (std::uint64_t seed = 70; seed < 74; ++seed) {
    Environment exact_env(fx.instance, seed);
    const FcResult exact =
        blucb_parallel(exact_env, *fx.cls, Confidence::from_delta(0.005));
    Environment relaxed_env(fx.instance, seed);
    FcOptions relaxed_options;
    relaxed_options.epsilon = 0.4;
    const FcResult relaxed = blucb_parallel(
        relaxed_env, *fx.cls, Confidence::from_delta(0.005), relaxed_options);
    CHECK(relaxed.total_pulls <= exact.total_pulls);
    CHECK(relaxed.answer == kDiamondBest);
  }
}

TEST_CASE("blucb_parallel at zero noise finishes within the first resumptions") {
  DiamondFixture fx(0.0);
  Environment env(fx.instance, 7);
  const FcResult result =
      blucb_parallel(env, *fx.cls, Confidence::from_delta(0.005));
  CHECK(result.answer == kDiamondBest);
  CHECK(result.wall_steps == 2 * fx.instance.n + 1);
  REQUIRE(!result.sub_algorithm_trace.empty());
  CHECK(result.sub_algorithm_trace[0].level == 0);
  CHECK(result.sub_algorithm_trace[0].pulls == 8);
}

TEST_CASE("blucb_parallel schedule: instance k advances every 2^k steps") {
  DiamondFixture fx;
  Environment env(fx.instance, 12);
  const FcResult result =
      blucb_parallel(env, *fx.cls, Confidence::from_delta(0.005));
  CHECK(result.answer == kDiamondBest);
  const long long steps = result.wall_steps;
  for (const SubAlgorithmStats& s : result.sub_algorithm_trace) {
    const long long period = 1LL << s.level;
    // Instances at or below the winner's level saw step `steps`; later ones
    // may have missed it.
    CHECK(s.resumes <= steps / period);
    CHECK(s.resumes >= (steps - 1) / period);
  }
  long long trace_pulls = 0;
  for (const SubAlgorithmStats& s : result.sub_algorithm_trace)
    trace_pulls += s.pulls;
  CHECK(trace_pulls == result.total_pulls);
}

TEST_CASE("uniform_fc pulls every arm each round") {
  DiamondFixture fx(0.0);
  Environment zero_env(fx.instance, 9);
  const FcResult zero = uniform_fc(zero_env, *fx.cls, Confidence::from_delta(0.05));
  CHECK(zero.answer == kDiamondBest);
  CHECK(zero.total_pulls == 4);

  DiamondFixture noisy;
  Environment env(noisy.instance, 10);
  const FcResult result =
      uniform_fc(env, *noisy.cls, Confidence::from_delta(0.05));
  CHECK(result.total_pulls % noisy.instance.n == 0);
  CHECK(result.pulls_per_arm[0] == result.pulls_per_arm[3]);
  CHECK(result.answer == kDiamondBest);
}

TEST_CASE("blucb pulls only while the radius clears the gap thresholds") {
  const Instance instance = make_figure_one_instance();
  const auto cls = make_decision_class(instance);
  const GapProfile profile = compute_gap_profile(instance, *cls);
  for (std::uint64_t seed = 60; seed < 70; ++seed) {
    Environment env(instance, seed);
    std::vector<std::pair<int, double>> pulls;
    FcOptions options;
    options.true_means = &instance.means;
    options.on_pull = [&](int arm, double rad) { pulls.push_back({arm, rad}); };
    const FcResult result =
        blucb(env, *cls, Confidence::from_delta(0.05), options);
    if (!result.concentration_held) continue;
    CHECK(result.answer == profile.m_star);
    for (const auto& [arm, rad] : pulls) {
      const double gap = profile.delta_c[static_cast<std::size_t>(arm)];
      const double floor_factor =
          profile.partition[static_cast<std::size_t>(arm)] == ArmRole::Unnecessary
              ? 0.5
              : 0.25;
      CHECK(rad >= floor_factor * gap);
    }
  }
}
