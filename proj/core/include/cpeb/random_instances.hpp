#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "cpeb/decision_class.hpp"
#include "cpeb/types.hpp"

namespace cpeb {

// Draws a small random spec of the given kind, retrying until the class is
// non-empty. Sizes stay small enough to enumerate.
DecisionClassSpec random_class_spec(ClassKind kind, std::mt19937_64& rng,
                                    int* n_out);

// Random weights for n arms. Mixes a continuous range, a coarse grid that
// provokes ties, and (optionally) occasional +infinity sentinels.
WeightVector random_weights(int n, std::mt19937_64& rng,
                            bool allow_infinite = true);

struct OracleCheckReport {
  ClassKind kind = ClassKind::TopK;
  long long instances_checked = 0;
  long long instances_skipped = 0;  // enumerations larger than the size cap
  long long queries_checked = 0;
  bool ok = true;
  std::string first_failure;
};

// Cross-checks every oracle against enumeration on random small instances:
// max_oracle, exclusion maximization, the accept-reject oracle (values equal
// exactly), membership checks (answer and witness feasibility), and the
// bottleneck-search contract. Stops early on the first failure.
OracleCheckReport check_oracles_against_brute_force(
    ClassKind kind, long long instances, std::uint64_t seed,
    std::size_t max_super_arms = 12);

}  // namespace cpeb
