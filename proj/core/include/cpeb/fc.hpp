#pragma once

#include <functional>
#include <vector>

#include "cpeb/decision_class.hpp"
#include "cpeb/env.hpp"
#include "cpeb/types.hpp"

namespace cpeb {

// Knobs shared by the fixed-confidence algorithms.
//
// epsilon > 0 relaxes the stopping rules to accept any super arm whose
// bottleneck is within epsilon of optimal.
//
// When true_means is set, the run tracks whether every empirical mean stayed
// inside its confidence radius at every round (the concentration event); the
// flag is diagnostic and never influences decisions.
struct FcOptions {
  double epsilon = 0.0;
  const WeightVector* true_means = nullptr;
  // Called on every post-initialization pull with (arm, its radius). Used by
  // tests to audit the sampling rule.
  std::function<void(int, double)> on_pull;
};

struct SubAlgorithmStats {
  int level = 0;  // instance k
  long long resumes = 0;
  long long pulls = 0;
};

struct FcResult {
  SuperArm answer;
  long long total_pulls = 0;
  std::vector<long long> pulls_per_arm;
  long long wall_steps = 0;  // stopping-rule evaluations (global steps for the
                             // interleaved variant)
  std::vector<SubAlgorithmStats> sub_algorithm_trace;  // interleaved runs only
  bool concentration_checked = false;
  bool concentration_held = false;
};

struct ExploreResult {
  SuperArm hypothesized_best;
  std::vector<int> near_bottleneck_set;  // sorted ascending
  long long total_pulls = 0;
  std::vector<long long> pulls_per_arm;
  bool concentration_checked = false;
  bool concentration_held = false;
};

// LUCB-style identification with the bottleneck-adaptive sampling rule: pull
// whichever of the two candidate bottleneck arms has the larger radius.
FcResult blucb(Environment& env, const DecisionClass& cls, Confidence delta,
               const FcOptions& options = {});

// Low-confidence exploration: guesses the best super arm and collects a set
// of arms near the rivals' true bottlenecks (returned in near_bottleneck_set).
ExploreResult blucb_explore(Environment& env, const DecisionClass& cls,
                            double kappa = 0.01, const FcOptions& options = {});

// Explore once at constant confidence, then verify the hypothesis at
// delta_v, sampling only the hypothesized optimum and the collected set.
FcResult blucb_verify(Environment& env, const DecisionClass& cls,
                      Confidence delta_v, const FcOptions& options = {});

// Interleaves verify instances with delta_k = delta / 2^(k+1); instance k
// advances by one sample whenever the global step is divisible by 2^k. First
// finished instance supplies the answer. Each instance runs on its own
// substream of env with fully independent empirical state.
FcResult blucb_parallel(Environment& env, const DecisionClass& cls,
                        Confidence delta, const FcOptions& options = {});

// Round-robin baseline: every round pulls all arms once and applies the same
// stopping rule under a shared radius.
FcResult uniform_fc(Environment& env, const DecisionClass& cls,
                    Confidence delta, const FcOptions& options = {});

}  // namespace cpeb
