#include "cpeb/gen.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace cpeb {
namespace {

struct Scored {
  const SuperArm* arm = nullptr;
  double value = -kInf;
};

// Scan in enumeration order (already sorted), so ties keep the
// lexicographically smallest super arm.
template <typename Skip>
Scored best_under(const std::vector<SuperArm>& all, const WeightVector& v,
                  const RewardFunction& reward, Skip&& skip) {
  Scored best;
  for (const SuperArm& m : all) {
    if (skip(m)) continue;
    const double value = reward.value(m, v);
    if (!best.arm || value > best.value) {
      best.arm = &m;
      best.value = value;
    }
  }
  return best;
}

}  // namespace

RewardFunction make_bottleneck_reward() {
  RewardFunction f;
  f.name = "bottleneck";
  f.lipschitz_u = 1.0;
  f.monotone = true;
  f.set_decreasing = true;
  f.value = [](const SuperArm& m, const WeightVector& v) {
    return min_weight(m, v);
  };
  return f;
}

RewardFunction make_linear_reward(double lipschitz_u) {
  RewardFunction f;
  f.name = "linear";
  f.lipschitz_u = lipschitz_u;
  f.monotone = true;
  f.value = [](const SuperArm& m, const WeightVector& v) {
    double sum = 0.0;
    for (int e : m.arms()) sum += v[static_cast<std::size_t>(e)];
    return sum;
  };
  return f;
}

RewardFunction make_quadratic_reward(double weight_bound, double lipschitz_u) {
  RewardFunction f;
  f.name = "quadratic";
  f.lipschitz_u = lipschitz_u;
  f.monotone = true;
  f.value = [weight_bound](const SuperArm& m, const WeightVector& v) {
    double sum = 0.0;
    for (int e : m.arms()) {
      const double x =
          std::clamp(v[static_cast<std::size_t>(e)], 0.0, weight_bound);
      sum += x * x;
    }
    return sum;
  };
  return f;
}

FcResult genlucb(Environment& env, const DecisionClass& cls,
                 const RewardFunction& reward, Confidence delta,
                 const GenOptions& options) {
  const int n = cls.num_arms();
  if (env.num_arms() != n)
    throw std::domain_error("environment and decision class disagree on n");
  if (!reward.value) throw std::domain_error("reward function is empty");

  const std::vector<SuperArm> all = cls.enumerate(options.enumeration_cap);
  // Rivals may skip every superset of the incumbent when either the class has
  // none anyway or the reward can only shrink on supersets; otherwise only
  // the incumbent itself is excluded.
  const bool skip_supersets =
      cls.no_proper_supersets() || reward.set_decreasing;

  const double noise = env.instance().noise_scale;
  EmpiricalState state(n);
  for (int e = 0; e < n; ++e) state.observe(e, env.pull(e));
  state.t = n;

  std::vector<double> rad(static_cast<std::size_t>(n));
  WeightVector lower(static_cast<std::size_t>(n)), upper(static_cast<std::size_t>(n));
  bool checked = options.true_means != nullptr;
  bool held = true;

  for (long long round = 1;; ++round) {
    ++state.t;
    for (int e = 0; e < n; ++e) {
      const std::size_t i = static_cast<std::size_t>(e);
      rad[i] = confidence_radius(state, e, n, delta, noise);
      lower[i] = state.emp_means[i] - rad[i];
      upper[i] = state.emp_means[i] + rad[i];
    }
    if (checked && held) {
      for (int e = 0; e < n; ++e)
        if (std::abs((*options.true_means)[static_cast<std::size_t>(e)] -
                     state.emp_means[static_cast<std::size_t>(e)]) >=
            rad[static_cast<std::size_t>(e)]) {
          held = false;
          break;
        }
    }

    const Scored incumbent =
        best_under(all, lower, reward, [](const SuperArm&) { return false; });
    assert(incumbent.arm);
    const SuperArm& m_t = *incumbent.arm;
    const Scored rival = best_under(all, upper, reward, [&](const SuperArm& m) {
      return skip_supersets ? m.is_superset_of(m_t) : m == m_t;
    });

    if (!rival.arm || incumbent.value >= rival.value) {
      FcResult result;
      result.answer = m_t;
      result.pulls_per_arm = state.counts;
      for (long long c : state.counts) result.total_pulls += c;
      result.wall_steps = round;
      result.concentration_checked = checked;
      result.concentration_held = held;
      return result;
    }

    int p = -1;
    double widest = -kInf;
    auto consider = [&](int e) {
      const double r = rad[static_cast<std::size_t>(e)];
      if (p < 0 || r > widest || (r == widest && e < p)) {
        p = e;
        widest = r;
      }
    };
    for (int e : m_t.arms()) consider(e);
    for (int e : rival.arm->arms()) consider(e);
    state.observe(p, env.pull(p));
  }
}

}  // namespace cpeb
