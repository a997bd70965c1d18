#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "cpeb/types.hpp"

namespace cpeb {

// Stochastic bandit environment. Rewards are N(mean, noise_scale^2), drawn
// from a counter-based generator keyed on (seed, arm, draw index): the i-th
// draw of an arm is a pure function of those three values, so replays,
// matched-seed comparisons and suspended sub-algorithms all see identical
// streams regardless of interleaving.
class Environment {
 public:
  Environment(Instance instance, std::uint64_t seed);
  Environment(std::shared_ptr<const Instance> instance, std::uint64_t seed);

  double pull(int arm);

  // An independent environment over the same instance whose streams are
  // derived from (seed, stream). Pull counters start at zero.
  Environment substream(std::uint64_t stream) const;

  const Instance& instance() const { return *instance_; }
  std::shared_ptr<const Instance> instance_ptr() const { return instance_; }
  int num_arms() const { return instance_->n; }
  std::uint64_t seed() const { return seed_; }
  long long total_pulls() const { return total_pulls_; }

  // Debugging hook; called as (pull index, arm, reward) for every pull.
  // Substreams inherit the observer.
  void set_observer(std::function<void(long long, int, double)> observer) {
    observer_ = std::move(observer);
  }

 private:
  std::shared_ptr<const Instance> instance_;
  std::uint64_t seed_;
  std::vector<std::uint64_t> draws_;
  long long total_pulls_ = 0;
  std::function<void(long long, int, double)> observer_;
};

// Pull counts, running means, and the algorithm's own round counter t.
struct EmpiricalState {
  explicit EmpiricalState(int n)
      : counts(static_cast<std::size_t>(n), 0),
        emp_means(static_cast<std::size_t>(n), 0.0) {}

  long long t = 0;
  std::vector<long long> counts;
  WeightVector emp_means;

  void observe(int arm, double reward) {
    auto& c = counts[static_cast<std::size_t>(arm)];
    auto& m = emp_means[static_cast<std::size_t>(arm)];
    ++c;
    m += (reward - m) / static_cast<double>(c);
  }
};

// Confidence parameter carried as ln(1/delta) so that deltas far below the
// smallest positive double (e.g. exp(-1000)) stay exact inside the radius.
struct Confidence {
  double log_inv = 0.0;

  static Confidence from_delta(double delta);
  static Confidence from_log_inv(double log_inv);

  // True when delta >= bound; usable even when delta itself underflows.
  bool delta_at_least(double bound) const;
};

// rad_t(e) = R * sqrt(2 * ln(4 n t^3 / delta) / count), with the delta part
// supplied as ln(1/delta).
double confidence_radius(long long count, long long t, int n,
                         const Confidence& confidence, double noise_scale);

double confidence_radius(const EmpiricalState& state, int arm, int n,
                         const Confidence& confidence, double noise_scale);

double confidence_radius(const EmpiricalState& state, int arm, int n,
                         double delta, double noise_scale);

}  // namespace cpeb
