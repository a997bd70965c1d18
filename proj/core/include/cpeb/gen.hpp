#pragma once

#include <functional>
#include <string>

#include "cpeb/decision_class.hpp"
#include "cpeb/env.hpp"
#include "cpeb/fc.hpp"
#include "cpeb/types.hpp"

namespace cpeb {

// A super-arm reward f(M, v) that is monotone in v and Lipschitz in the
// sup norm with constant lipschitz_u. The constant plays no role at runtime;
// it exists so the assumptions can be spot-checked.
struct RewardFunction {
  std::string name;
  double lipschitz_u = 1.0;
  bool monotone = true;
  // Adding arms can only lower the value (true for the bottleneck); lets the
  // rival search skip supersets of the incumbent even on classes where
  // proper supersets could exist.
  bool set_decreasing = false;
  std::function<double(const SuperArm&, const WeightVector&)> value;
};

RewardFunction make_bottleneck_reward();
// Sum of means; lipschitz_u should bound the largest super-arm size.
RewardFunction make_linear_reward(double lipschitz_u);
// Sum of squared means, intended for weights in [0, weight_bound];
// lipschitz_u should bound 2 * weight_bound * max super-arm size.
RewardFunction make_quadratic_reward(double weight_bound, double lipschitz_u);

struct GenOptions {
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  const WeightVector* true_means = nullptr;
};

// LUCB over a general reward. The maximization oracle is exhaustive
// enumeration (capped), which is the supported regime; the sampling rule
// pulls the widest arm anywhere in the two candidate super arms.
FcResult genlucb(Environment& env, const DecisionClass& cls,
                 const RewardFunction& reward, Confidence delta,
                 const GenOptions& options = {});

}  // namespace cpeb
