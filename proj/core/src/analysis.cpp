#include "cpeb/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "cpeb/oracles.hpp"

namespace cpeb {

std::string to_string(ArmRole role) {
  switch (role) {
    case ArmRole::Optimal:
      return "optimal";
    case ArmRole::Necessary:
      return "necessary";
    case ArmRole::Unnecessary:
      return "unnecessary";
  }
  throw std::domain_error("unknown arm role");
}

UniquenessReport validate_unique_optimum(const Instance& instance,
                                         const DecisionClass& cls,
                                         std::size_t cap) {
  check_instance(instance);
  try {
    const auto all = cls.enumerate(cap);
    double best = -kInf;
    for (const SuperArm& m : all) best = std::max(best, min_weight(m, instance.means));
    long long winners = 0;
    for (const SuperArm& m : all)
      if (min_weight(m, instance.means) == best) ++winners;
    if (winners == 1) return {true, "unique optimum (enumeration)"};
    return {false, "optimum attained by " + std::to_string(winners) +
                       " super arms (enumeration)"};
  } catch (const CapacityError&) {
    warn("uniqueness validation: enumeration cap exceeded, using oracle pair");
  }
  const auto best = cls.max_oracle(instance.means);
  if (!best) return {false, "decision class is empty"};
  const auto runner_up = max_oracle_excluding(cls, *best, instance.means);
  if (!runner_up) return {true, "single super arm (oracle pair)"};
  if (min_weight(*best, instance.means) >
      min_weight(*runner_up, instance.means))
    return {true, "unique optimum (oracle pair)"};
  return {false, "optimum tied with a distinct super arm (oracle pair)"};
}

GapProfile compute_gap_profile(const Instance& instance,
                               const DecisionClass& cls) {
  check_instance(instance);
  const auto uniqueness = validate_unique_optimum(instance, cls);
  if (!uniqueness.unique)
    throw ValidationError("gap profile needs a unique optimum: " +
                          uniqueness.diagnostic);

  const int n = instance.n;
  const WeightVector& w = instance.means;
  GapProfile profile;
  profile.m_star = *cls.max_oracle(w);
  profile.opt = min_weight(profile.m_star, w);

  const auto runner_up = max_oracle_excluding(cls, profile.m_star, w);
  profile.second_best = runner_up ? min_weight(*runner_up, w) : -kInf;

  profile.delta_c.assign(static_cast<std::size_t>(n),
                         std::numeric_limits<double>::quiet_NaN());
  profile.delta_b.assign(static_cast<std::size_t>(n),
                         std::numeric_limits<double>::quiet_NaN());
  profile.partition.assign(static_cast<std::size_t>(n), ArmRole::Unnecessary);
  profile.in_some_super_arm.assign(static_cast<std::size_t>(n), 0);

  for (int e = 0; e < n; ++e) {
    const std::size_t i = static_cast<std::size_t>(e);
    if (profile.m_star.contains(e)) {
      profile.partition[i] = ArmRole::Optimal;
      profile.in_some_super_arm[i] = 1;
      profile.delta_c[i] = w[i] - profile.second_best;  // +inf if no rival
      ArmMask only_e(static_cast<std::size_t>(n), 0);
      only_e[i] = 1;
      const auto without = ar_oracle(cls, {std::nullopt, only_e}, w);
      profile.delta_b[i] =
          without ? profile.opt - min_weight(*without, w) : kInf;
      continue;
    }
    ArmMask rejected(static_cast<std::size_t>(n), 0);
    const auto containing = ar_oracle(cls, {e, rejected}, w);
    if (!containing) continue;  // arm covered by no super arm: gaps undefined
    profile.in_some_super_arm[i] = 1;
    const double best_with_e = min_weight(*containing, w);
    profile.partition[i] =
        w[i] < profile.opt ? ArmRole::Necessary : ArmRole::Unnecessary;
    profile.delta_c[i] = profile.partition[i] == ArmRole::Necessary
                             ? profile.opt - best_with_e
                             : w[i] - best_with_e;
    profile.delta_b[i] = profile.opt - best_with_e;
  }

  const double r2 = instance.noise_scale * instance.noise_scale;
  std::vector<double> sorted_b;
  for (int e = 0; e < n; ++e) {
    const std::size_t i = static_cast<std::size_t>(e);
    if (!profile.in_some_super_arm[i]) continue;
    const double dc2 = profile.delta_c[i] * profile.delta_c[i];
    profile.h_e += r2 / dc2;
    if (profile.partition[i] != ArmRole::Unnecessary) profile.h_v += r2 / dc2;
    sorted_b.push_back(profile.delta_b[i]);
  }
  std::sort(sorted_b.begin(), sorted_b.end());
  for (std::size_t i = 0; i < sorted_b.size(); ++i)
    profile.h_b = std::max(profile.h_b, static_cast<double>(i + 1) /
                                            (sorted_b[i] * sorted_b[i]));
  return profile;
}

}  // namespace cpeb
