#include "cpeb/random_instances.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "cpeb/oracles.hpp"

namespace cpeb {
namespace {

DecisionClassSpec random_graph_spec(ClassKind kind, std::mt19937_64& rng) {
  DecisionClassSpec spec;
  spec.kind = kind;
  if (kind == ClassKind::BipartiteMatching) {
    std::uniform_int_distribution<int> side(2, 3);
    const int left = side(rng);
    const int right = side(rng);
    spec.num_vertices = left + right;
    std::uniform_int_distribution<int> extra(1, left * right);
    const int edges = extra(rng);
    std::uniform_int_distribution<int> pick_l(0, left - 1);
    std::uniform_int_distribution<int> pick_r(0, right - 1);
    for (int i = 0; i < edges; ++i)
      spec.edges.push_back({pick_l(rng), left + pick_r(rng)});
    return spec;
  }
  std::uniform_int_distribution<int> vertices(3, kind == ClassKind::STPath ? 6 : 5);
  spec.num_vertices = vertices(rng);
  std::uniform_int_distribution<int> edge_count(spec.num_vertices - 1,
                                                spec.num_vertices + 4);
  const int edges = edge_count(rng);
  std::uniform_int_distribution<int> pick(0, spec.num_vertices - 1);
  for (int i = 0; i < edges; ++i) {
    int u = pick(rng);
    int v = pick(rng);
    if (u == v) v = (v + 1) % spec.num_vertices;
    spec.edges.push_back({u, v});
  }
  if (kind == ClassKind::STPath) {
    spec.source = 0;
    spec.sink = spec.num_vertices - 1;
  }
  return spec;
}

}  // namespace

DecisionClassSpec random_class_spec(ClassKind kind, std::mt19937_64& rng,
                                    int* n_out) {
  for (;;) {
    DecisionClassSpec spec;
    int n = 0;
    if (kind == ClassKind::TopK) {
      std::uniform_int_distribution<int> arms(2, 6);
      n = arms(rng);
      std::uniform_int_distribution<int> pick_k(1, n);
      spec.kind = ClassKind::TopK;
      spec.k = pick_k(rng);
    } else {
      spec = random_graph_spec(kind, rng);
      n = static_cast<int>(spec.edges.size());
    }
    try {
      make_decision_class(spec, n);
    } catch (const ValidationError&) {
      continue;  // empty class (or non-bipartite draw); redraw
    }
    if (n_out) *n_out = n;
    return spec;
  }
}

WeightVector random_weights(int n, std::mt19937_64& rng, bool allow_infinite) {
  std::uniform_int_distribution<int> mode(0, 2);
  std::uniform_real_distribution<double> cont(-1.0, 2.0);
  std::uniform_int_distribution<int> grid(0, 4);
  std::uniform_int_distribution<int> coin(0, 19);
  WeightVector v(static_cast<std::size_t>(n));
  const int style = mode(rng);
  for (double& w : v) {
    if (allow_infinite && coin(rng) == 0) {
      w = kInf;
      continue;
    }
    w = style == 0 ? cont(rng) : 0.25 * static_cast<double>(grid(rng));
  }
  return v;
}

OracleCheckReport check_oracles_against_brute_force(ClassKind kind,
                                                    long long instances,
                                                    std::uint64_t seed,
                                                    std::size_t max_super_arms) {
  std::mt19937_64 rng(seed);
  OracleCheckReport report;
  report.kind = kind;

  auto fail = [&](const std::string& what) {
    report.ok = false;
    if (report.first_failure.empty()) report.first_failure = what;
  };
  auto value_of = [](const std::optional<SuperArm>& m, const WeightVector& v) {
    return m ? min_weight(*m, v) : -kInf;
  };

  while (report.instances_checked < instances && report.ok) {
    int n = 0;
    const DecisionClassSpec spec = random_class_spec(kind, rng, &n);
    const auto cls = make_decision_class(spec, n);
    std::vector<SuperArm> all;
    try {
      all = cls->enumerate(max_super_arms);
    } catch (const CapacityError&) {
      ++report.instances_skipped;
      continue;
    }
    ++report.instances_checked;
    const WeightVector v = random_weights(n, rng);

    // Bottleneck maximization vs. enumeration.
    const auto best = cls->max_oracle(v);
    const auto best_ref = brute_force_best(*cls, v);
    if (value_of(best, v) != value_of(best_ref, v)) {
      fail("max_oracle value mismatch");
      break;
    }
    if (best && std::find(all.begin(), all.end(), *best) == all.end()) {
      fail("max_oracle witness infeasible");
      break;
    }
    ++report.queries_checked;

    // Exclusion maximization around a random feasible super arm.
    std::uniform_int_distribution<std::size_t> pick_arm_set(0, all.size() - 1);
    const SuperArm& excluded = all[pick_arm_set(rng)];
    const auto outside = max_oracle_excluding(*cls, excluded, v);
    const auto outside_ref = brute_force_best_excluding(*cls, excluded, v);
    if (value_of(outside, v) != value_of(outside_ref, v)) {
      fail("max_oracle_excluding value mismatch");
      break;
    }
    if (outside &&
        (outside->is_superset_of(excluded) ||
         std::find(all.begin(), all.end(), *outside) == all.end())) {
      fail("max_oracle_excluding witness infeasible");
      break;
    }
    ++report.queries_checked;

    // Bottleneck search: equals the set of rival bottlenecks.
    const auto searched = bottleneck_search(*cls, excluded, v);
    if (searched != brute_force_bottleneck_set(*cls, excluded, v)) {
      fail("bottleneck_search set mismatch");
      break;
    }
    ++report.queries_checked;

    // Accept-reject oracle on random queries.
    std::uniform_int_distribution<int> pick_arm(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int q = 0; q < 4 && report.ok; ++q) {
      ArOracleQuery query;
      query.rejected.assign(static_cast<std::size_t>(n), 0);
      for (int e = 0; e < n; ++e)
        if (coin(rng) == 0) query.rejected[static_cast<std::size_t>(e)] = 1;
      if (coin(rng) != 0) {
        const int required = pick_arm(rng);
        query.required = required;
        query.rejected[static_cast<std::size_t>(required)] = 0;
      }
      const auto got = ar_oracle(*cls, query, v);
      const auto ref = brute_force_ar(*cls, query, v);
      if (value_of(got, v) != value_of(ref, v)) {
        fail("ar_oracle value mismatch");
        break;
      }
      if (got.has_value() != ref.has_value()) {
        fail("ar_oracle feasibility mismatch");
        break;
      }
      ++report.queries_checked;
    }

    // Membership checks: answer and witness validity on a random mask.
    ArmMask allowed(static_cast<std::size_t>(n), 0);
    for (int e = 0; e < n; ++e)
      allowed[static_cast<std::size_t>(e)] = coin(rng) != 0;
    for (int e = 0; e < n && report.ok; ++e) {
      if (!allowed[static_cast<std::size_t>(e)]) continue;
      const auto witness = cls->exist_oracle(allowed, e);
      bool reachable = false;
      for (const SuperArm& m : all) {
        if (!m.contains(e)) continue;
        bool inside = true;
        for (int a : m.arms())
          if (!allowed[static_cast<std::size_t>(a)]) {
            inside = false;
            break;
          }
        if (inside) {
          reachable = true;
          break;
        }
      }
      if (witness.has_value() != reachable) {
        fail("exist_oracle answer mismatch");
        break;
      }
      if (witness) {
        if (!witness->contains(e) ||
            std::find(all.begin(), all.end(), *witness) == all.end()) {
          fail("exist_oracle witness infeasible");
          break;
        }
        for (int a : witness->arms())
          if (!allowed[static_cast<std::size_t>(a)]) {
            fail("exist_oracle witness leaves the allowed set");
            break;
          }
      }
      ++report.queries_checked;
    }
  }

  if (!report.ok && !report.first_failure.empty()) {
    std::ostringstream msg;
    msg << report.first_failure << " (kind=" << to_string(kind)
        << ", after " << report.instances_checked << " instances)";
    report.first_failure = msg.str();
  }
  return report;
}

}  // namespace cpeb
