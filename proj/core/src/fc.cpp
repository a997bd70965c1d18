#include "cpeb/fc.hpp"

#include <cassert>
#include <cmath>
#include <memory>

#include "cpeb/oracles.hpp"

namespace cpeb {
namespace {

constexpr double kLn2 = 0.6931471805599453094172321214582;

void require_same_arms(const Environment& env, const DecisionClass& cls) {
  if (env.num_arms() != cls.num_arms())
    throw std::domain_error("environment and decision class disagree on n");
}

struct Bounds {
  std::vector<double> rad;
  WeightVector lower;
  WeightVector upper;

  explicit Bounds(int n)
      : rad(static_cast<std::size_t>(n)),
        lower(static_cast<std::size_t>(n)),
        upper(static_cast<std::size_t>(n)) {}

  void refresh(const EmpiricalState& state, int n, const Confidence& conf,
               double noise_scale) {
    for (int e = 0; e < n; ++e) {
      const std::size_t i = static_cast<std::size_t>(e);
      rad[i] = confidence_radius(state, e, n, conf, noise_scale);
      lower[i] = state.emp_means[i] - rad[i];
      upper[i] = state.emp_means[i] + rad[i];
    }
  }
};

struct ConcentrationTracker {
  const WeightVector* truth = nullptr;
  bool held = true;

  void check(const EmpiricalState& state, const Bounds& bounds) {
    if (!truth || !held) return;
    for (std::size_t i = 0; i < truth->size(); ++i) {
      if (std::abs((*truth)[i] - state.emp_means[i]) >= bounds.rad[i]) {
        held = false;
        return;
      }
    }
  }
};

// argmax of rad over candidates; ties go to the smallest arm index.
int widest_arm(const std::vector<int>& candidates, const Bounds& bounds) {
  int best = -1;
  double best_rad = -kInf;
  for (int e : candidates) {
    const double r = bounds.rad[static_cast<std::size_t>(e)];
    if (best < 0 || r > best_rad || (r == best_rad && e < best)) {
      best = e;
      best_rad = r;
    }
  }
  return best;
}

FcResult finish(const SuperArm& answer, const EmpiricalState& state,
                long long wall_steps, const ConcentrationTracker& tracker) {
  FcResult result;
  result.answer = answer;
  result.pulls_per_arm = state.counts;
  for (long long c : state.counts) result.total_pulls += c;
  result.wall_steps = wall_steps;
  result.concentration_checked = tracker.truth != nullptr;
  result.concentration_held = tracker.held;
  return result;
}

// Shared body of the explore phase so the one-sample resumable runner and the
// standalone entry point stay in lockstep. Stepping is factored per pull.
class ExploreLoop {
 public:
  ExploreLoop(Environment& env, const DecisionClass& cls, Confidence kappa,
              const FcOptions& options)
      : env_(env),
        cls_(cls),
        kappa_(kappa),
        n_(cls.num_arms()),
        state_(cls.num_arms()),
        bounds_(cls.num_arms()) {
    tracker_.truth = options.true_means;
  }

  // Performs exactly one pull unless the loop stops first; returns true when
  // the stopping rule fired (result() is then valid).
  bool step() {
    if (done_) return true;
    if (init_next_ < n_) {
      state_.observe(init_next_, env_.pull(init_next_));
      if (++init_next_ == n_) state_.t = n_;
      return false;
    }
    while (true) {
      ++state_.t;
      bounds_.refresh(state_, n_, kappa_, env_.instance().noise_scale);
      tracker_.check(state_, bounds_);
      auto best = cls_.max_oracle(bounds_.lower);
      assert(best.has_value());
      const std::vector<int> near_set =
          bottleneck_search(cls_, *best, bounds_.lower);
      std::vector<int> violators;
      for (int e : near_set) {
        const std::size_t i = static_cast<std::size_t>(e);
        if (bounds_.upper[i] >
            0.5 * (min_weight(*best, bounds_.lower) + bounds_.lower[i]))
          violators.push_back(e);
      }
      if (violators.empty()) {
        hypothesized_ = *best;
        near_bottleneck_ = near_set;
        done_ = true;
        return true;
      }
      violators.push_back(min_arm(*best, bounds_.lower));
      const int p = widest_arm(violators, bounds_);
      state_.observe(p, env_.pull(p));
      return false;
    }
  }

  ExploreResult result() const {
    ExploreResult out;
    out.hypothesized_best = hypothesized_;
    out.near_bottleneck_set = near_bottleneck_;
    out.pulls_per_arm = state_.counts;
    for (long long c : state_.counts) out.total_pulls += c;
    out.concentration_checked = tracker_.truth != nullptr;
    out.concentration_held = tracker_.held;
    return out;
  }

  const SuperArm& hypothesized_best() const { return hypothesized_; }
  const std::vector<int>& near_bottleneck_set() const { return near_bottleneck_; }
  const EmpiricalState& state() const { return state_; }
  bool concentration_held() const { return tracker_.held; }
  bool concentration_checked() const { return tracker_.truth != nullptr; }

 private:
  Environment& env_;
  const DecisionClass& cls_;
  Confidence kappa_;
  int n_;
  EmpiricalState state_;
  Bounds bounds_;
  ConcentrationTracker tracker_;
  int init_next_ = 0;
  bool done_ = false;
  SuperArm hypothesized_;
  std::vector<int> near_bottleneck_;
};

// Explore-then-verify as a resumable state machine: every step() consumes at
// most one sample, so an interleaving scheduler can meter progress exactly.
class VerifyRunner {
 public:
  VerifyRunner(Environment& env, const DecisionClass& cls, Confidence delta_v,
               const FcOptions& options)
      : env_(env),
        cls_(cls),
        delta_v_(delta_v),
        options_(options),
        n_(cls.num_arms()),
        explore_(env, cls, Confidence::from_delta(kExploreKappa), options),
        verify_state_(cls.num_arms()),
        bounds_(cls.num_arms()) {
    tracker_.truth = options.true_means;
  }

  static constexpr double kExploreKappa = 0.01;

  bool finished() const { return phase_ == Phase::Done; }
  const SuperArm& answer() const { return answer_; }

  // Advances until one sample is consumed or the run finishes.
  bool step() {
    while (true) {
      switch (phase_) {
        case Phase::Explore: {
          const bool stopped = explore_.step();
          if (!stopped) return false;
          hypothesized_ = explore_.hypothesized_best();
          near_bottleneck_ = explore_.near_bottleneck_set();
          phase_ = Phase::VerifyInit;
          break;
        }
        case Phase::VerifyInit: {
          if (init_next_ < n_) {
            verify_state_.observe(init_next_, env_.pull(init_next_));
            ++init_next_;
            return false;
          }
          verify_state_.t = n_;
          phase_ = Phase::VerifyLoop;
          break;
        }
        case Phase::VerifyLoop: {
          ++verify_state_.t;
          ++verify_rounds_;
          bounds_.refresh(verify_state_, n_, delta_v_,
                          env_.instance().noise_scale);
          tracker_.check(verify_state_, bounds_);
          auto rival = max_oracle_excluding(cls_, hypothesized_, bounds_.upper);
          if (!rival ||
              min_weight(hypothesized_, bounds_.lower) >=
                  min_weight(*rival, bounds_.upper) - options_.epsilon) {
            answer_ = hypothesized_;
            phase_ = Phase::Done;
            return true;
          }
          const int anchor = min_arm(hypothesized_, bounds_.lower);
          std::vector<int> candidates;
          for (int e : near_bottleneck_)
            if (bounds_.upper[static_cast<std::size_t>(e)] >
                bounds_.lower[static_cast<std::size_t>(anchor)])
              candidates.push_back(e);
          candidates.push_back(anchor);
          const int p = widest_arm(candidates, bounds_);
          verify_state_.observe(p, env_.pull(p));
          return false;
        }
        case Phase::Done:
          return true;
      }
    }
  }

  std::vector<long long> pulls_per_arm() const {
    std::vector<long long> total = explore_.state().counts;
    for (int e = 0; e < n_; ++e)
      total[static_cast<std::size_t>(e)] += verify_state_.counts[static_cast<std::size_t>(e)];
    return total;
  }

  long long total_pulls() const {
    long long total = 0;
    for (long long c : pulls_per_arm()) total += c;
    return total;
  }

  long long verify_rounds() const { return verify_rounds_; }

  bool concentration_checked() const {
    return options_.true_means != nullptr;
  }
  bool concentration_held() const {
    return explore_.concentration_held() && tracker_.held;
  }

 private:
  enum class Phase { Explore, VerifyInit, VerifyLoop, Done };

  Environment& env_;
  const DecisionClass& cls_;
  Confidence delta_v_;
  FcOptions options_;
  int n_;
  ExploreLoop explore_;
  EmpiricalState verify_state_;
  Bounds bounds_;
  ConcentrationTracker tracker_;
  Phase phase_ = Phase::Explore;
  int init_next_ = 0;
  long long verify_rounds_ = 0;
  SuperArm hypothesized_;
  std::vector<int> near_bottleneck_;
  SuperArm answer_;
};

}  // namespace

FcResult blucb(Environment& env, const DecisionClass& cls, Confidence delta,
               const FcOptions& options) {
  require_same_arms(env, cls);
  if (options.epsilon < 0.0)
    throw std::domain_error("epsilon must be non-negative");
  const int n = cls.num_arms();
  const double noise = env.instance().noise_scale;
  EmpiricalState state(n);
  for (int e = 0; e < n; ++e) state.observe(e, env.pull(e));
  state.t = n;
  Bounds bounds(n);
  ConcentrationTracker tracker{options.true_means};
  long long rounds = 0;
  while (true) {
    ++state.t;
    ++rounds;
    bounds.refresh(state, n, delta, noise);
    tracker.check(state, bounds);
    auto best = cls.max_oracle(bounds.lower);
    assert(best.has_value());
    auto rival = max_oracle_excluding(cls, *best, bounds.upper);
    if (!rival || min_weight(*best, bounds.lower) >=
                      min_weight(*rival, bounds.upper) - options.epsilon)
      return finish(*best, state, rounds, tracker);
    const int c = min_arm(*best, bounds.lower);
    const int d = min_arm(*rival, bounds.lower);
    const int p = widest_arm({c, d}, bounds);
    if (options.on_pull) options.on_pull(p, bounds.rad[static_cast<std::size_t>(p)]);
    state.observe(p, env.pull(p));
  }
}

ExploreResult blucb_explore(Environment& env, const DecisionClass& cls,
                            double kappa, const FcOptions& options) {
  require_same_arms(env, cls);
  if (!(kappa > 0.0 && kappa < 1.0))
    throw std::domain_error("kappa must lie in (0, 1)");
  ExploreLoop loop(env, cls, Confidence::from_delta(kappa), options);
  while (!loop.step()) {
  }
  return loop.result();
}

FcResult blucb_verify(Environment& env, const DecisionClass& cls,
                      Confidence delta_v, const FcOptions& options) {
  require_same_arms(env, cls);
  if (delta_v.delta_at_least(0.01))
    warn("blucb_verify: delta_v >= 0.01 is outside the intended regime");
  VerifyRunner runner(env, cls, delta_v, options);
  long long steps = 0;
  while (!runner.step()) ++steps;
  FcResult result;
  result.answer = runner.answer();
  result.pulls_per_arm = runner.pulls_per_arm();
  result.total_pulls = runner.total_pulls();
  result.wall_steps = runner.verify_rounds();
  result.concentration_checked = runner.concentration_checked();
  result.concentration_held = runner.concentration_held();
  return result;
}

FcResult blucb_parallel(Environment& env, const DecisionClass& cls,
                        Confidence delta, const FcOptions& options) {
  require_same_arms(env, cls);
  if (delta.delta_at_least(0.01))
    warn("blucb_parallel: delta >= 0.01 is outside the intended regime");
  std::vector<std::unique_ptr<Environment>> streams;
  std::vector<std::unique_ptr<VerifyRunner>> runners;
  std::vector<long long> resumes;

  auto ensure_runner = [&](int k) {
    while (static_cast<int>(runners.size()) <= k) {
      const int level = static_cast<int>(runners.size());
      Confidence delta_k{delta.log_inv +
                         static_cast<double>(level + 1) * kLn2};
      streams.push_back(std::make_unique<Environment>(
          env.substream(static_cast<std::uint64_t>(level))));
      runners.push_back(std::make_unique<VerifyRunner>(*streams.back(), cls,
                                                       delta_k, options));
      resumes.push_back(0);
    }
  };

  for (long long t = 1;; ++t) {
    for (int k = 0; k < 63 && (t % (1LL << k)) == 0; ++k) {
      ensure_runner(k);
      ++resumes[static_cast<std::size_t>(k)];
      if (runners[static_cast<std::size_t>(k)]->step()) {
        FcResult result;
        result.answer = runners[static_cast<std::size_t>(k)]->answer();
        result.pulls_per_arm.assign(static_cast<std::size_t>(cls.num_arms()), 0);
        bool all_held = true;
        bool any_checked = false;
        for (int j = 0; j < static_cast<int>(runners.size()); ++j) {
          const auto per_arm = runners[static_cast<std::size_t>(j)]->pulls_per_arm();
          long long pulls = 0;
          for (int e = 0; e < cls.num_arms(); ++e) {
            result.pulls_per_arm[static_cast<std::size_t>(e)] +=
                per_arm[static_cast<std::size_t>(e)];
            pulls += per_arm[static_cast<std::size_t>(e)];
          }
          result.sub_algorithm_trace.push_back(
              {j, resumes[static_cast<std::size_t>(j)], pulls});
          any_checked |= runners[static_cast<std::size_t>(j)]->concentration_checked();
          all_held &= runners[static_cast<std::size_t>(j)]->concentration_held();
        }
        for (long long c : result.pulls_per_arm) result.total_pulls += c;
        result.wall_steps = t;
        result.concentration_checked = any_checked;
        result.concentration_held = all_held;
        return result;
      }
    }
  }
}

FcResult uniform_fc(Environment& env, const DecisionClass& cls,
                    Confidence delta, const FcOptions& options) {
  require_same_arms(env, cls);
  const int n = cls.num_arms();
  const double noise = env.instance().noise_scale;
  EmpiricalState state(n);
  Bounds bounds(n);
  ConcentrationTracker tracker{options.true_means};
  for (long long round = 1;; ++round) {
    for (int e = 0; e < n; ++e) state.observe(e, env.pull(e));
    state.t = round;
    bounds.refresh(state, n, delta, noise);
    tracker.check(state, bounds);
    auto best = cls.max_oracle(bounds.lower);
    assert(best.has_value());
    auto rival = max_oracle_excluding(cls, *best, bounds.upper);
    if (!rival || min_weight(*best, bounds.lower) >=
                      min_weight(*rival, bounds.upper) - options.epsilon)
      return finish(*best, state, round, tracker);
  }
}

}  // namespace cpeb
