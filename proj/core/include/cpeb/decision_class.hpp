#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cpeb/types.hpp"

namespace cpeb {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// A combinatorial decision class: the set of feasible super arms generated by
// a DecisionClassSpec. Instances are immutable after construction and every
// oracle call is reentrant.
//
// All oracles restrict to super arms whose arms lie inside `allowed`.
// Feasibility always refers to the full structure (e.g. a matching must reach
// the whole graph's maximum cardinality even when `allowed` is a subset).
class DecisionClass {
 public:
  virtual ~DecisionClass() = default;

  int num_arms() const { return n_; }
  ClassKind kind() const { return kind_; }

  // Every shipped class has equal-cardinality super arms (or the simple-path
  // property), so no feasible super arm strictly contains another.
  virtual bool no_proper_supersets() const { return true; }

  // Best super arm under the bottleneck value of v, restricted to `allowed`.
  // Empty restricted class yields nullopt. Deterministic for fixed inputs.
  virtual std::optional<SuperArm> max_oracle(const ArmMask& allowed,
                                             const WeightVector& v) const = 0;

  std::optional<SuperArm> max_oracle(const WeightVector& v) const {
    return max_oracle(full_mask(n_), v);
  }

  // A feasible super arm inside `allowed` containing `arm`, or nullopt.
  // Throws std::domain_error when arm is outside `allowed`.
  virtual std::optional<SuperArm> exist_oracle(const ArmMask& allowed,
                                               int arm) const = 0;

  // All feasible super arms, each once, sorted by their index sequence.
  // Throws CapacityError when the class holds more than `cap` super arms.
  virtual std::vector<SuperArm> enumerate(
      std::size_t cap = kDefaultEnumerationCap) const = 0;

 protected:
  DecisionClass(ClassKind kind, int n) : kind_(kind), n_(n) {}

  void require_allowed(const ArmMask& allowed, int arm) const;

  ClassKind kind_;
  int n_;
};

// Builds the concrete class for a spec with n arms. Throws ValidationError
// when the spec is malformed, inconsistent with n, or describes an empty
// class.
std::shared_ptr<const DecisionClass> make_decision_class(
    const DecisionClassSpec& spec, int n);

std::shared_ptr<const DecisionClass> make_decision_class(
    const Instance& instance);

}  // namespace cpeb
