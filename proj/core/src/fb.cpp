#include "cpeb/fb.hpp"

#include <algorithm>
#include <cmath>

#include "cpeb/oracles.hpp"

namespace cpeb {
namespace {

// Gap of the current best over a rival bottleneck; an empty rival counts as
// -infinity, which makes the gap +infinity. Two infinite bottlenecks compare
// as equal so the selection stays deterministic.
double empirical_gap(double best, double rival) {
  if (std::isinf(rival) && rival < 0.0) return kInf;
  if (std::isinf(best) && std::isinf(rival)) return 0.0;
  return best - rival;
}

}  // namespace

long long bsar_phase_quota(long long budget, int n, int phase) {
  double harmonic = 0.0;
  for (int i = 1; i <= n; ++i) harmonic += 1.0 / static_cast<double>(i);
  const double share = static_cast<double>(budget - n) /
                       (harmonic * static_cast<double>(n - phase + 1));
  return static_cast<long long>(std::ceil(share));
}

FbResult bsar(Environment& env, const DecisionClass& cls, long long budget,
              const FbOptions& options) {
  const int n = cls.num_arms();
  if (env.num_arms() != n)
    throw std::domain_error("environment and decision class disagree on n");
  if (budget <= n) throw std::domain_error("bsar needs budget > n");

  std::vector<double> sorted_gaps;
  bool gaps_usable = false;
  if (options.fixed_budget_gaps &&
      static_cast<int>(options.fixed_budget_gaps->size()) == n) {
    sorted_gaps = *options.fixed_budget_gaps;
    std::sort(sorted_gaps.begin(), sorted_gaps.end());
    gaps_usable = std::none_of(sorted_gaps.begin(), sorted_gaps.end(),
                               [](double g) { return std::isnan(g); });
  }

  EmpiricalState state(n);
  ArmMask accepted(static_cast<std::size_t>(n), 0);
  ArmMask rejected(static_cast<std::size_t>(n), 0);

  FbResult result;
  result.concentration_checked = options.true_means != nullptr && gaps_usable;
  result.concentration_held = true;
  result.mistake_checked = options.optimal != nullptr;
  result.mistake_free = true;

  long long prev_quota = 0;
  for (int phase = 1; phase <= n; ++phase) {
    const long long quota = bsar_phase_quota(budget, n, phase);
    const long long fresh = quota - prev_quota;
    prev_quota = quota;
    for (int e = 0; e < n; ++e) {
      if (accepted[static_cast<std::size_t>(e)] ||
          rejected[static_cast<std::size_t>(e)])
        continue;
      for (long long i = 0; i < fresh; ++i) state.observe(e, env.pull(e));
    }

    if (result.concentration_checked && result.concentration_held) {
      const double bound = sorted_gaps[static_cast<std::size_t>(n - phase)] / 8.0;
      for (int e = 0; e < n; ++e) {
        if (accepted[static_cast<std::size_t>(e)] ||
            rejected[static_cast<std::size_t>(e)])
          continue;
        if (std::abs(state.emp_means[static_cast<std::size_t>(e)] -
                     (*options.true_means)[static_cast<std::size_t>(e)]) >=
            bound) {
          result.concentration_held = false;
          break;
        }
      }
    }

    WeightVector working = state.emp_means;
    for (int e = 0; e < n; ++e)
      if (accepted[static_cast<std::size_t>(e)])
        working[static_cast<std::size_t>(e)] = kInf;

    const auto best = ar_oracle(cls, {std::nullopt, rejected}, working);
    if (!best) {
      // Rejections ate every remaining super arm; the trial is a failure.
      result.completed = false;
      break;
    }
    const double best_value = min_weight(*best, working);

    int pick = -1;
    double pick_gap = -kInf;
    for (int e = 0; e < n; ++e) {
      if (accepted[static_cast<std::size_t>(e)] ||
          rejected[static_cast<std::size_t>(e)])
        continue;
      std::optional<SuperArm> rival;
      if (best->contains(e)) {
        ArmMask rejected_plus = rejected;
        rejected_plus[static_cast<std::size_t>(e)] = 1;
        rival = ar_oracle(cls, {std::nullopt, rejected_plus}, working);
      } else {
        rival = ar_oracle(cls, {e, rejected}, working);
      }
      const double gap = empirical_gap(
          best_value, rival ? min_weight(*rival, working) : -kInf);
      if (pick < 0 || gap > pick_gap) {
        pick_gap = gap;
        pick = e;
      }
    }

    if (best->contains(pick)) {
      accepted[static_cast<std::size_t>(pick)] = 1;
      if (result.mistake_checked && !options.optimal->contains(pick))
        result.mistake_free = false;
    } else {
      rejected[static_cast<std::size_t>(pick)] = 1;
      if (result.mistake_checked && options.optimal->contains(pick))
        result.mistake_free = false;
    }
  }

  if (result.completed) {
    std::vector<int> arms;
    for (int e = 0; e < n; ++e)
      if (accepted[static_cast<std::size_t>(e)]) arms.push_back(e);
    result.answer = SuperArm(std::move(arms));
  }
  result.pulls_per_arm = state.counts;
  for (long long c : state.counts) result.total_pulls += c;
  return result;
}

FbResult uniform_fb(Environment& env, const DecisionClass& cls,
                    long long budget) {
  const int n = cls.num_arms();
  if (env.num_arms() != n)
    throw std::domain_error("environment and decision class disagree on n");
  if (budget < n) throw std::domain_error("uniform_fb needs budget >= n");
  const long long per_arm = budget / n;
  EmpiricalState state(n);
  for (int e = 0; e < n; ++e)
    for (long long i = 0; i < per_arm; ++i) state.observe(e, env.pull(e));
  const auto best = cls.max_oracle(state.emp_means);
  FbResult result;
  result.answer = *best;
  result.pulls_per_arm = state.counts;
  result.total_pulls = per_arm * n;
  return result;
}

}  // namespace cpeb
