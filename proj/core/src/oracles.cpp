#include "cpeb/oracles.hpp"

#include <algorithm>

namespace cpeb {
namespace {

// Prefer the higher bottleneck value; on ties the lexicographically smaller
// super arm.
void keep_better(std::optional<SuperArm>& best, double& best_value,
                 SuperArm candidate, double value) {
  if (!best || value > best_value ||
      (value == best_value && candidate < *best)) {
    best = std::move(candidate);
    best_value = value;
  }
}

ArmMask threshold_mask(const WeightVector& v, double threshold, int n) {
  ArmMask mask(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    if (v[static_cast<std::size_t>(a)] >= threshold) mask[static_cast<std::size_t>(a)] = 1;
  return mask;
}

void check_query(const ArOracleQuery& query, int n) {
  if (static_cast<int>(query.rejected.size()) != n)
    throw std::domain_error("ar_oracle: rejected mask length mismatch");
  if (query.required) {
    const int e = *query.required;
    if (e < 0 || e >= n)
      throw std::domain_error("ar_oracle: required arm out of range");
    if (query.rejected[static_cast<std::size_t>(e)])
      throw std::domain_error("ar_oracle: required arm is rejected");
  }
}

}  // namespace

std::optional<SuperArm> max_oracle_excluding(const DecisionClass& cls,
                                             const SuperArm& excluded,
                                             const WeightVector& v) {
  const int n = cls.num_arms();
  std::optional<SuperArm> best;
  double best_value = -kInf;
  for (int e : excluded.arms()) {
    auto candidate = cls.max_oracle(mask_without(full_mask(n), e), v);
    if (!candidate) continue;
    const double value = min_weight(*candidate, v);
    keep_better(best, best_value, std::move(*candidate), value);
  }
  return best;
}

std::vector<int> bottleneck_search(const DecisionClass& cls,
                                   const SuperArm& excluded,
                                   const WeightVector& v) {
  const int n = cls.num_arms();
  if (static_cast<int>(v.size()) != n)
    throw std::domain_error("bottleneck_search: weight length mismatch");
  const double excluded_bottleneck = min_weight(excluded, v);
  std::vector<int> out;
  for (int e = 0; e < n; ++e) {
    const ArmMask at_least = threshold_mask(v, v[static_cast<std::size_t>(e)], n);
    if (excluded.contains(e) &&
        v[static_cast<std::size_t>(e)] == excluded_bottleneck) {
      // e is a bottleneck of the excluded super arm itself; count it only if
      // some witness avoids at least one other arm of the excluded set.
      for (int other : excluded.arms()) {
        if (other == e) continue;
        if (cls.exist_oracle(mask_without(at_least, other), e)) {
          out.push_back(e);
          break;
        }
      }
    } else if (cls.exist_oracle(at_least, e)) {
      out.push_back(e);
    }
  }
  return out;
}

std::optional<SuperArm> ar_oracle(const DecisionClass& cls,
                                  const ArOracleQuery& query,
                                  const WeightVector& v) {
  const int n = cls.num_arms();
  check_query(query, n);
  ArmMask allowed(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    allowed[static_cast<std::size_t>(a)] = !query.rejected[static_cast<std::size_t>(a)];

  if (!query.required) return cls.max_oracle(allowed, v);

  const int req = *query.required;
  std::vector<double> values;
  for (int a = 0; a < n; ++a)
    if (allowed[static_cast<std::size_t>(a)] &&
        v[static_cast<std::size_t>(a)] <= v[static_cast<std::size_t>(req)])
      values.push_back(v[static_cast<std::size_t>(a)]);
  std::sort(values.begin(), values.end(), std::greater<double>());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  // Membership feasibility above a threshold is monotone in the threshold;
  // binary-search the largest feasible one. Thresholds above the required
  // arm's weight are skipped because they exclude it outright.
  int lo = 0, hi = static_cast<int>(values.size()) - 1, best = -1;
  auto feasible_at = [&](double threshold) {
    ArmMask mask(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a)
      mask[static_cast<std::size_t>(a)] =
          allowed[static_cast<std::size_t>(a)] &&
          v[static_cast<std::size_t>(a)] >= threshold;
    return cls.exist_oracle(mask, req);
  };
  while (lo <= hi) {
    const int mid = (lo + hi) / 2;
    if (feasible_at(values[static_cast<std::size_t>(mid)])) {
      best = mid;
      hi = mid - 1;
    } else {
      lo = mid + 1;
    }
  }
  if (best < 0) return std::nullopt;
  return feasible_at(values[static_cast<std::size_t>(best)]);
}

std::optional<SuperArm> brute_force_best(const DecisionClass& cls,
                                         const WeightVector& v,
                                         std::size_t cap) {
  std::optional<SuperArm> best;
  double best_value = -kInf;
  for (SuperArm& m : cls.enumerate(cap)) {
    const double value = min_weight(m, v);
    keep_better(best, best_value, std::move(m), value);
  }
  return best;
}

std::optional<SuperArm> brute_force_best_excluding(const DecisionClass& cls,
                                                   const SuperArm& excluded,
                                                   const WeightVector& v,
                                                   std::size_t cap) {
  std::optional<SuperArm> best;
  double best_value = -kInf;
  for (SuperArm& m : cls.enumerate(cap)) {
    if (m.is_superset_of(excluded)) continue;
    const double value = min_weight(m, v);
    keep_better(best, best_value, std::move(m), value);
  }
  return best;
}

std::vector<int> brute_force_bottleneck_set(const DecisionClass& cls,
                                            const SuperArm& excluded,
                                            const WeightVector& v,
                                            std::size_t cap) {
  std::vector<char> is_bottleneck(v.size(), 0);
  for (const SuperArm& m : cls.enumerate(cap)) {
    if (m.is_superset_of(excluded)) continue;
    const double value = min_weight(m, v);
    for (int e : m.arms())
      if (v[static_cast<std::size_t>(e)] == value)
        is_bottleneck[static_cast<std::size_t>(e)] = 1;
  }
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(v.size()); ++e)
    if (is_bottleneck[static_cast<std::size_t>(e)]) out.push_back(e);
  return out;
}

std::optional<SuperArm> brute_force_ar(const DecisionClass& cls,
                                       const ArOracleQuery& query,
                                       const WeightVector& v, std::size_t cap) {
  check_query(query, cls.num_arms());
  std::optional<SuperArm> best;
  double best_value = -kInf;
  for (SuperArm& m : cls.enumerate(cap)) {
    if (query.required && !m.contains(*query.required)) continue;
    bool hits_rejected = false;
    for (int e : m.arms())
      if (query.rejected[static_cast<std::size_t>(e)]) {
        hits_rejected = true;
        break;
      }
    if (hits_rejected) continue;
    const double value = min_weight(m, v);
    keep_better(best, best_value, std::move(m), value);
  }
  return best;
}

}  // namespace cpeb
