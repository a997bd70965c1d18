#pragma once

#include <map>
#include <string>

#include "cpeb/types.hpp"

namespace cpeb {

// Built-in instance generators. Every generator returns an instance whose
// optimum is unique; gen-time validation enforces it. Weight tables are
// frozen and documented in the README.

// Two disjoint two-edge s-t paths with means (1.0, 0.9, 0.8, 0.5).
Instance make_diamond_instance(double noise_scale = 1.0);

// 85-edge s-t path instance: a 15-edge main path with means rising from
// 2*delta_min in steps of delta_min, and five 14-edge rival branches, each
// holding one gate edge at delta_min and thirteen edges at the main path's
// maximum. Documented range for delta_min: [0.4, 0.7].
Instance make_path_instance(double delta_min, double noise_scale = 1.0);

// 5x3 complete bipartite matching instance, n = 15: the optimal matching has
// means 0.1 + {14, 13, 12} * delta_min and the twelve remaining edges take
// 0.1 + {11, ..., 0} * delta_min, arranged so the runner-up matching sits
// exactly delta_min below the optimum. Documented range: [0.03, 0.07].
Instance make_matching_instance(double delta_min, double noise_scale = 1.0);

// Nine-flight air-route network between six airports; find the route from
// vertex 0 to vertex 2 with the widest bottleneck. Synthetic seat counts in
// [0.62, 1.84].
Instance make_air_route_instance(double noise_scale = 1.0);

// Six-edge, three-path instance: a single-edge optimal path against a
// two-edge and a three-edge rival. Each rival owns one low gate edge (its
// necessary arm); the remaining three rival edges sit at or above the
// optimum, so they are unnecessary for separating the paths.
Instance make_figure_one_instance(double opt = 0.9, double gate_low = 0.4,
                                  double gate_high = 0.45,
                                  double filler = 0.95,
                                  double noise_scale = 1.0);

// Dispatch by generator name ("diamond", "path", "matching", "air_route",
// "figure1") with parameters like {"delta_min": 0.5, "noise_scale": 1}.
// Unknown names throw ValidationError; out-of-range parameters warn.
Instance generate_instance(const std::string& name,
                           const std::map<std::string, double>& params = {});

}  // namespace cpeb
