#pragma once

#include <string>
#include <vector>

#include "cpeb/decision_class.hpp"
#include "cpeb/types.hpp"

namespace cpeb {

// Where an arm sits relative to the optimal super arm: inside it, outside
// with mean below the optimal bottleneck (necessary), or outside with mean
// at or above it (unnecessary).
enum class ArmRole { Optimal, Necessary, Unnecessary };

std::string to_string(ArmRole role);

// Per-arm gaps and instance hardness computed from the true means.
//
// delta_c / delta_b hold NaN for arms that belong to no super arm; those arms
// are tagged Unnecessary and excluded from the hardness aggregates.
struct GapProfile {
  SuperArm m_star;
  double opt = 0.0;
  double second_best = -kInf;  // best bottleneck outside the optimum's supersets
  std::vector<double> delta_c;
  std::vector<double> delta_b;
  std::vector<ArmRole> partition;
  std::vector<char> in_some_super_arm;
  double h_v = 0.0;  // verification hardness: sum over optimal+necessary arms
  double h_e = 0.0;  // exploration hardness: sum over all covered arms
  double h_b = 0.0;  // fixed-budget hardness: max_i i / delta_b_(i)^2
};

struct UniquenessReport {
  bool unique = false;
  std::string diagnostic;
};

// True iff exactly one super arm attains the maximum bottleneck value.
// Prefers exact enumeration; past the cap it falls back to comparing the
// oracle optimum against the best super arm outside its superset family,
// which is exact for every shipped class, and says so in the diagnostic.
UniquenessReport validate_unique_optimum(
    const Instance& instance, const DecisionClass& cls,
    std::size_t cap = kDefaultEnumerationCap);

// Requires a unique optimum (throws ValidationError otherwise).
GapProfile compute_gap_profile(const Instance& instance,
                               const DecisionClass& cls);

}  // namespace cpeb
