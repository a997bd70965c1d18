#pragma once

#include <optional>
#include <vector>

#include "cpeb/decision_class.hpp"
#include "cpeb/types.hpp"

namespace cpeb {

// Accept-reject restricted maximization query: best super arm that contains
// `required` (when set) and avoids every rejected arm.
struct ArOracleQuery {
  std::optional<int> required;
  ArmMask rejected;
};

// Best super arm outside the superset family of `excluded`, i.e. over all
// feasible super arms that do not contain excluded as a subset. Computed by
// dropping each arm of `excluded` in turn and re-running the class oracle.
std::optional<SuperArm> max_oracle_excluding(const DecisionClass& cls,
                                             const SuperArm& excluded,
                                             const WeightVector& v);

// Collects every arm that is the bottleneck of some super arm outside the
// superset family of `excluded`, by thresholding at each arm's weight and
// running membership checks. Returned sorted ascending.
std::vector<int> bottleneck_search(const DecisionClass& cls,
                                   const SuperArm& excluded,
                                   const WeightVector& v);

// Best super arm subject to the accept-reject constraints; nullopt when the
// restricted class is empty. +infinity weights rank above all finite ones.
std::optional<SuperArm> ar_oracle(const DecisionClass& cls,
                                  const ArOracleQuery& query,
                                  const WeightVector& v);

// Enumeration-backed reference implementations. They share nothing with the
// oracles above beyond the class's enumerate(), so they serve as independent
// checks. All tie-breaks pick the lexicographically smallest super arm.
std::optional<SuperArm> brute_force_best(const DecisionClass& cls,
                                         const WeightVector& v,
                                         std::size_t cap = kDefaultEnumerationCap);

std::vector<int> brute_force_bottleneck_set(
    const DecisionClass& cls, const SuperArm& excluded, const WeightVector& v,
    std::size_t cap = kDefaultEnumerationCap);

std::optional<SuperArm> brute_force_ar(const DecisionClass& cls,
                                       const ArOracleQuery& query,
                                       const WeightVector& v,
                                       std::size_t cap = kDefaultEnumerationCap);

std::optional<SuperArm> brute_force_best_excluding(
    const DecisionClass& cls, const SuperArm& excluded, const WeightVector& v,
    std::size_t cap = kDefaultEnumerationCap);

}  // namespace cpeb
