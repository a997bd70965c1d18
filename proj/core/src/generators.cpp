#include "cpeb/generators.hpp"

#include <sstream>

#include "cpeb/analysis.hpp"
#include "cpeb/decision_class.hpp"

namespace cpeb {
namespace {

double param_or(const std::map<std::string, double>& params,
                const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void require_unique(const Instance& instance, const std::string& name) {
  const auto cls = make_decision_class(instance);
  const auto report = validate_unique_optimum(instance, *cls);
  if (!report.unique)
    throw ValidationError("generator " + name +
                          " produced a non-unique optimum: " +
                          report.diagnostic);
}

void check_range(const std::string& name, double value, double lo, double hi) {
  if (value < lo || value > hi) {
    std::ostringstream msg;
    msg << name << "=" << value << " is outside the documented range [" << lo
        << ", " << hi << "]";
    warn(msg.str());
  }
}

}  // namespace

Instance make_diamond_instance(double noise_scale) {
  Instance instance;
  instance.n = 4;
  instance.means = {1.0, 0.9, 0.8, 0.5};
  instance.noise_scale = noise_scale;
  instance.class_spec.kind = ClassKind::STPath;
  instance.class_spec.num_vertices = 4;
  instance.class_spec.source = 0;
  instance.class_spec.sink = 3;
  instance.class_spec.edges = {{0, 1}, {1, 3}, {0, 2}, {2, 3}};
  require_unique(instance, "diamond");
  return instance;
}

Instance make_path_instance(double delta_min, double noise_scale) {
  check_range("delta_min", delta_min, 0.4, 0.7);
  if (!(delta_min > 0.0)) throw ValidationError("delta_min must be positive");

  constexpr int kMainEdges = 15;
  constexpr int kBranches = 5;
  constexpr int kBranchEdges = 14;
  constexpr int kForkVertex = 3;  // branches leave the main path here

  Instance instance;
  instance.n = kMainEdges + kBranches * kBranchEdges;  // 85
  instance.noise_scale = noise_scale;
  instance.class_spec.kind = ClassKind::STPath;
  instance.class_spec.source = 0;
  instance.class_spec.sink = kMainEdges;

  // Main path vertices 0..15; branch j adds 13 interior vertices.
  int next_vertex = kMainEdges + 1;
  for (int i = 0; i < kMainEdges; ++i) {
    instance.class_spec.edges.push_back({i, i + 1});
    instance.means.push_back(static_cast<double>(i + 2) * delta_min);
  }
  const double filler = static_cast<double>(kMainEdges + 1) * delta_min;
  for (int j = 0; j < kBranches; ++j) {
    int prev = kForkVertex;
    for (int i = 0; i < kBranchEdges; ++i) {
      const int next =
          (i + 1 == kBranchEdges) ? kMainEdges : next_vertex++;
      instance.class_spec.edges.push_back({prev, next});
      // One gate edge per branch carries the rival bottleneck; the rest sit
      // at the main path's maximum so they never decide anything.
      instance.means.push_back(i == 0 ? delta_min : filler);
      prev = next;
    }
  }
  instance.class_spec.num_vertices = next_vertex;
  require_unique(instance, "path");
  return instance;
}

Instance make_matching_instance(double delta_min, double noise_scale) {
  check_range("delta_min", delta_min, 0.03, 0.07);
  if (!(delta_min > 0.0)) throw ValidationError("delta_min must be positive");

  constexpr int kLeft = 5;
  constexpr int kRight = 3;

  Instance instance;
  instance.n = kLeft * kRight;
  instance.noise_scale = noise_scale;
  instance.class_spec.kind = ClassKind::BipartiteMatching;
  instance.class_spec.num_vertices = kLeft + kRight;

  // Arms 0..2 form the optimal matching (left i -- right i). The heaviest
  // remaining edges hang off the two unmatched left vertices, which puts the
  // runner-up matching exactly delta_min below the optimum: swapping the
  // lightest optimal edge for the 0.1 + 11*delta_min edge costs one step.
  for (int i = 0; i < kRight; ++i) {
    instance.class_spec.edges.push_back({i, kLeft + i});
    instance.means.push_back(0.1 + static_cast<double>(14 - i) * delta_min);
  }
  struct BlackEdge {
    int l, r, rank;
  };
  constexpr BlackEdge kBlack[] = {{0, 1, 5}, {0, 2, 4}, {1, 0, 3}, {1, 2, 2},
                                  {2, 0, 1}, {2, 1, 0}, {3, 0, 9}, {3, 1, 10},
                                  {3, 2, 11}, {4, 0, 6}, {4, 1, 7}, {4, 2, 8}};
  for (const BlackEdge& edge : kBlack) {
    instance.class_spec.edges.push_back({edge.l, kLeft + edge.r});
    instance.means.push_back(0.1 + static_cast<double>(edge.rank) * delta_min);
  }
  require_unique(instance, "matching");
  return instance;
}

Instance make_air_route_instance(double noise_scale) {
  // Vertices: 0 origin hub, 2 destination hub, 1/3/4/5 intermediate stops.
  // Rewards are normalized seat counts; the widest route is 0 - 1 - 2.
  Instance instance;
  instance.n = 9;
  instance.noise_scale = noise_scale;
  instance.class_spec.kind = ClassKind::STPath;
  instance.class_spec.num_vertices = 6;
  instance.class_spec.source = 0;
  instance.class_spec.sink = 2;
  instance.class_spec.edges = {
      {0, 1},  // 1.84
      {1, 2},  // 1.60
      {0, 3},  // 1.20
      {3, 2},  // 0.98
      {0, 4},  // 1.10
      {4, 2},  // 0.62
      {0, 5},  // 0.90
      {5, 3},  // 0.75
      {4, 3},  // 0.70
  };
  instance.means = {1.84, 1.60, 1.20, 0.98, 1.10, 0.62, 0.90, 0.75, 0.70};
  require_unique(instance, "air_route");
  return instance;
}

Instance make_figure_one_instance(double opt, double gate_low,
                                  double gate_high, double filler,
                                  double noise_scale) {
  if (!(gate_low < opt && gate_high < opt && filler >= opt))
    throw ValidationError("figure1 needs gates below opt and filler >= opt");
  Instance instance;
  instance.n = 6;
  instance.noise_scale = noise_scale;
  instance.class_spec.kind = ClassKind::STPath;
  instance.class_spec.num_vertices = 5;
  instance.class_spec.source = 0;
  instance.class_spec.sink = 4;
  // Paths: {0} optimal; rivals {1,2} and {3,4,5} each carry their own gate
  // (arm 1 resp. arm 3) plus filler arms at or above the optimum, so the two
  // rivals are necessary-arm-bound while the fillers stay unnecessary.
  instance.class_spec.edges = {{0, 4}, {0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}};
  instance.means = {opt, gate_low, filler, gate_high, filler, filler};
  require_unique(instance, "figure1");
  return instance;
}

Instance generate_instance(const std::string& name,
                           const std::map<std::string, double>& params) {
  const double noise = param_or(params, "noise_scale", 1.0);
  if (name == "diamond") return make_diamond_instance(noise);
  if (name == "path")
    return make_path_instance(param_or(params, "delta_min", 0.5), noise);
  if (name == "matching")
    return make_matching_instance(param_or(params, "delta_min", 0.05), noise);
  if (name == "air_route" || name == "air-route")
    return make_air_route_instance(noise);
  if (name == "figure1")
    return make_figure_one_instance(param_or(params, "opt", 0.9),
                                    param_or(params, "gate_low", 0.4),
                                    param_or(params, "gate_high", 0.45),
                                    param_or(params, "filler", 0.95), noise);
  throw ValidationError("unknown generator: " + name);
}

}  // namespace cpeb
