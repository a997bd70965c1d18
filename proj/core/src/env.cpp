#include "cpeb/env.hpp"

#include <cmath>

namespace cpeb {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// One standard normal per (seed, arm, index), Box-Muller on two hashed
// uniforms. u1 lands in (0, 1] so the log stays finite.
double standard_gaussian(std::uint64_t seed, std::uint64_t arm,
                         std::uint64_t index) {
  const std::uint64_t key = splitmix64(seed ^ splitmix64(arm + 0x51afd7ed558ccd25ULL));
  const std::uint64_t a = splitmix64(key ^ splitmix64(index));
  const std::uint64_t b = splitmix64(a);
  const double u1 = (static_cast<double>(a >> 11) + 1.0) * 0x1p-53;
  const double u2 = static_cast<double>(b >> 11) * 0x1p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

}  // namespace

Environment::Environment(Instance instance, std::uint64_t seed)
    : Environment(std::make_shared<const Instance>(std::move(instance)), seed) {}

Environment::Environment(std::shared_ptr<const Instance> instance,
                         std::uint64_t seed)
    : instance_(std::move(instance)),
      seed_(seed),
      draws_(static_cast<std::size_t>(instance_->n), 0) {
  check_instance(*instance_);
}

double Environment::pull(int arm) {
  if (arm < 0 || arm >= instance_->n)
    throw std::domain_error("pull: arm index out of range");
  const std::uint64_t index = draws_[static_cast<std::size_t>(arm)]++;
  ++total_pulls_;
  const double reward =
      instance_->means[static_cast<std::size_t>(arm)] +
      instance_->noise_scale *
          standard_gaussian(seed_, static_cast<std::uint64_t>(arm), index);
  if (observer_) observer_(total_pulls_, arm, reward);
  return reward;
}

Environment Environment::substream(std::uint64_t stream) const {
  Environment child(instance_, splitmix64(splitmix64(seed_) ^ (stream + 1)));
  child.observer_ = observer_;
  return child;
}

Confidence Confidence::from_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("confidence delta must lie in (0, 1)");
  return Confidence{std::log(1.0 / delta)};
}

Confidence Confidence::from_log_inv(double log_inv) {
  if (!(log_inv > 0.0) || std::isinf(log_inv))
    throw std::domain_error("ln(1/delta) must be positive and finite");
  return Confidence{log_inv};
}

bool Confidence::delta_at_least(double bound) const {
  return log_inv <= std::log(1.0 / bound);
}

double confidence_radius(long long count, long long t, int n,
                         const Confidence& confidence, double noise_scale) {
  if (count < 1) throw std::domain_error("confidence radius needs count >= 1");
  if (t < 1) throw std::domain_error("confidence radius needs t >= 1");
  const double log_term = std::log(4.0 * static_cast<double>(n)) +
                          3.0 * std::log(static_cast<double>(t)) +
                          confidence.log_inv;
  return noise_scale * std::sqrt(2.0 * log_term / static_cast<double>(count));
}

double confidence_radius(const EmpiricalState& state, int arm, int n,
                         const Confidence& confidence, double noise_scale) {
  return confidence_radius(state.counts[static_cast<std::size_t>(arm)],
                           state.t, n, confidence, noise_scale);
}

double confidence_radius(const EmpiricalState& state, int arm, int n,
                         double delta, double noise_scale) {
  return confidence_radius(state, arm, n, Confidence::from_delta(delta),
                           noise_scale);
}

}  // namespace cpeb
