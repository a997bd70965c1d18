#include "cpeb/types.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace cpeb {

void warn(const std::string& message) {
  std::fprintf(stderr, "warning: %s\n", message.c_str());
}

ArmMask full_mask(int n) { return ArmMask(static_cast<std::size_t>(n), 1); }

ArmMask mask_without(ArmMask mask, int arm) {
  mask.at(static_cast<std::size_t>(arm)) = 0;
  return mask;
}

std::string SuperArm::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < arms_.size(); ++i) {
    if (i > 0) out << ',';
    out << arms_[i];
  }
  out << '}';
  return out.str();
}

std::string to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::TopK:
      return "top_k";
    case ClassKind::STPath:
      return "st_path";
    case ClassKind::BipartiteMatching:
      return "bipartite_matching";
    case ClassKind::SpanningTree:
      return "spanning_tree";
  }
  throw std::domain_error("unknown class kind");
}

ClassKind class_kind_from_string(const std::string& name) {
  if (name == "top_k") return ClassKind::TopK;
  if (name == "st_path") return ClassKind::STPath;
  if (name == "bipartite_matching") return ClassKind::BipartiteMatching;
  if (name == "spanning_tree") return ClassKind::SpanningTree;
  throw ValidationError("unknown decision class kind: " + name);
}

void check_instance(const Instance& instance) {
  if (instance.n <= 0) throw ValidationError("instance needs n >= 1 arms");
  if (static_cast<int>(instance.means.size()) != instance.n)
    throw ValidationError("means length does not match n");
  for (double w : instance.means)
    if (!std::isfinite(w)) throw ValidationError("instance means must be finite");
  if (!(instance.noise_scale >= 0.0))
    throw ValidationError("noise_scale must be non-negative");

  const DecisionClassSpec& spec = instance.class_spec;
  if (spec.kind == ClassKind::TopK) {
    if (spec.k < 1 || spec.k > instance.n)
      throw ValidationError("top_k needs 1 <= k <= n");
    return;
  }
  if (static_cast<int>(spec.edges.size()) != instance.n)
    throw ValidationError("edge list must label exactly one edge per arm");
  if (spec.num_vertices <= 0)
    throw ValidationError("graph class needs num_vertices >= 1");
  for (const GraphEdge& e : spec.edges) {
    if (e.u < 0 || e.u >= spec.num_vertices || e.v < 0 ||
        e.v >= spec.num_vertices)
      throw ValidationError("edge endpoint out of range");
  }
  if (spec.kind == ClassKind::STPath) {
    if (spec.source < 0 || spec.source >= spec.num_vertices ||
        spec.sink < 0 || spec.sink >= spec.num_vertices)
      throw ValidationError("st_path needs valid source and sink vertices");
    if (spec.source == spec.sink)
      throw ValidationError("st_path needs source != sink");
  }
}

double min_weight(const SuperArm& m, const WeightVector& v) {
  if (m.empty()) throw std::domain_error("min_weight of an empty super arm");
  double best = kInf;
  for (int e : m.arms()) {
    if (e < 0 || static_cast<std::size_t>(e) >= v.size())
      throw std::domain_error("min_weight: arm index out of range");
    best = std::min(best, v[static_cast<std::size_t>(e)]);
  }
  return best;
}

int min_arm(const SuperArm& m, const WeightVector& v) {
  if (m.empty()) throw std::domain_error("min_arm of an empty super arm");
  int best = -1;
  double best_value = kInf;
  for (int e : m.arms()) {  // ascending, so ties keep the smallest index
    if (e < 0 || static_cast<std::size_t>(e) >= v.size())
      throw std::domain_error("min_arm: arm index out of range");
    const double w = v[static_cast<std::size_t>(e)];
    if (best < 0 || w < best_value) {
      best = e;
      best_value = w;
    }
  }
  return best;
}

}  // namespace cpeb
