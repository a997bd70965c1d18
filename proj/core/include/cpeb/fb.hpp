#pragma once

#include <vector>

#include "cpeb/decision_class.hpp"
#include "cpeb/env.hpp"
#include "cpeb/types.hpp"

namespace cpeb {

// Diagnostics for the fixed-budget algorithms. All fields are optional and
// never influence decisions.
//
// fixed_budget_gaps enables the per-phase concentration check: in every phase
// t the undetermined arms' empirical means must sit within one eighth of the
// (n+1-t)-th smallest gap of their true means. optimal enables per-phase
// accept/reject mistake tracking.
struct FbOptions {
  const WeightVector* true_means = nullptr;
  const SuperArm* optimal = nullptr;
  const std::vector<double>* fixed_budget_gaps = nullptr;
};

struct FbResult {
  SuperArm answer;
  bool completed = true;  // false when the restricted class emptied mid-run
  long long total_pulls = 0;
  std::vector<long long> pulls_per_arm;
  bool concentration_checked = false;
  bool concentration_held = false;
  bool mistake_checked = false;
  bool mistake_free = false;
};

// Per-phase cumulative pull quota: ceil((budget - n) / (H_n * (n - t + 1)))
// with H_n the n-th harmonic number. Exposed for tests.
long long bsar_phase_quota(long long budget, int n, int phase);

// Successive accept/reject with the infinity acceptance scheme: accepted
// arms' empirical rewards are pinned to +infinity before each phase's oracle
// calls. Uses at most `budget` pulls. budget must exceed n.
FbResult bsar(Environment& env, const DecisionClass& cls, long long budget,
              const FbOptions& options = {});

// Pulls every arm floor(budget / n) times and returns the empirical best.
// budget must be at least n.
FbResult uniform_fb(Environment& env, const DecisionClass& cls,
                    long long budget);

}  // namespace cpeb
