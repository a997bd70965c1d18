#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpeb {

// Arm indices are 0-based everywhere, including on disk.
using WeightVector = std::vector<double>;

// Dense membership mask over arm indices.
using ArmMask = std::vector<char>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Thrown when an enumeration would exceed its configured cap.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an instance or configuration fails validation.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void warn(const std::string& message);

ArmMask full_mask(int n);
ArmMask mask_without(ArmMask mask, int arm);

// A feasible subset of base arms. Stored sorted ascending, so the default
// lexicographic comparison orders super arms by their sorted index sequence.
class SuperArm {
 public:
  SuperArm() = default;
  explicit SuperArm(std::vector<int> arms) : arms_(std::move(arms)) {
    std::sort(arms_.begin(), arms_.end());
    arms_.erase(std::unique(arms_.begin(), arms_.end()), arms_.end());
  }

  const std::vector<int>& arms() const { return arms_; }
  std::size_t size() const { return arms_.size(); }
  bool empty() const { return arms_.empty(); }

  bool contains(int arm) const {
    return std::binary_search(arms_.begin(), arms_.end(), arm);
  }

  bool is_superset_of(const SuperArm& other) const {
    return std::includes(arms_.begin(), arms_.end(), other.arms_.begin(),
                         other.arms_.end());
  }

  std::string to_string() const;

  friend bool operator==(const SuperArm&, const SuperArm&) = default;
  friend auto operator<=>(const SuperArm&, const SuperArm&) = default;

 private:
  std::vector<int> arms_;
};

enum class ClassKind { TopK, STPath, BipartiteMatching, SpanningTree };

std::string to_string(ClassKind kind);
ClassKind class_kind_from_string(const std::string& name);

struct GraphEdge {
  int u = -1;
  int v = -1;
};

// Describes the combinatorial structure whose feasible subsets form the
// decision class. Arm i labels edges[i] for the graph kinds.
struct DecisionClassSpec {
  ClassKind kind = ClassKind::TopK;
  int k = 0;                     // TopK only
  int num_vertices = 0;          // graph kinds
  std::vector<GraphEdge> edges;  // graph kinds; arm i == edges[i]
  int source = -1;               // STPath
  int sink = -1;                 // STPath
};

struct Instance {
  int n = 0;
  WeightVector means;
  double noise_scale = 0.0;  // sub-Gaussian scale R; all sampling is N(mean, R^2)
  DecisionClassSpec class_spec;
};

// Structural checks only (sizes, finiteness, index ranges). Whether the
// optimum is unique is a separate, enumeration-backed question; see analysis.
void check_instance(const Instance& instance);

// Minimum entry of v over the arms of m. +infinity entries rank above every
// finite value, so an all-infinite super arm evaluates to +infinity.
double min_weight(const SuperArm& m, const WeightVector& v);

// The arm attaining min_weight; ties break toward the smallest arm index.
int min_arm(const SuperArm& m, const WeightVector& v);

}  // namespace cpeb
