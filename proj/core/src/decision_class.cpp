#include "cpeb/decision_class.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <numeric>

namespace cpeb {
namespace {

struct Dsu {
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

// Arms in `allowed` ordered by descending weight; equal weights keep the
// smaller index first.
std::vector<int> arms_by_weight_desc(const ArmMask& allowed,
                                     const WeightVector& v) {
  std::vector<int> order;
  order.reserve(allowed.size());
  for (int a = 0; a < static_cast<int>(allowed.size()); ++a)
    if (allowed[a]) order.push_back(a);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return v[static_cast<std::size_t>(a)] > v[static_cast<std::size_t>(b)];
  });
  return order;
}

void check_weights(const WeightVector& v, int n) {
  if (static_cast<int>(v.size()) != n)
    throw std::domain_error("weight vector length does not match arm count");
}

// ---------------------------------------------------------------------------
// Top-k: every k-subset of arms is feasible.

class TopKClass final : public DecisionClass {
 public:
  TopKClass(int n, int k) : DecisionClass(ClassKind::TopK, n), k_(k) {
    if (k < 1 || k > n) throw ValidationError("top_k needs 1 <= k <= n");
  }

  std::optional<SuperArm> max_oracle(const ArmMask& allowed,
                                     const WeightVector& v) const override {
    check_weights(v, n_);
    std::vector<int> order = arms_by_weight_desc(allowed, v);
    if (static_cast<int>(order.size()) < k_) return std::nullopt;
    order.resize(static_cast<std::size_t>(k_));
    return SuperArm(std::move(order));
  }

  std::optional<SuperArm> exist_oracle(const ArmMask& allowed,
                                       int arm) const override {
    require_allowed(allowed, arm);
    std::vector<int> picked{arm};
    for (int a = 0; a < n_ && static_cast<int>(picked.size()) < k_; ++a)
      if (allowed[static_cast<std::size_t>(a)] && a != arm) picked.push_back(a);
    if (static_cast<int>(picked.size()) < k_) return std::nullopt;
    return SuperArm(std::move(picked));
  }

  std::vector<SuperArm> enumerate(std::size_t cap) const override {
    std::vector<SuperArm> out;
    std::vector<int> cur;
    enumerate_rec(0, cur, cap, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void enumerate_rec(int start, std::vector<int>& cur, std::size_t cap,
                     std::vector<SuperArm>& out) const {
    if (static_cast<int>(cur.size()) == k_) {
      if (out.size() >= cap) throw CapacityError("top_k enumeration exceeds cap");
      out.emplace_back(cur);
      return;
    }
    const int need = k_ - static_cast<int>(cur.size());
    for (int a = start; a + need <= n_; ++a) {
      cur.push_back(a);
      enumerate_rec(a + 1, cur, cap, out);
      cur.pop_back();
    }
  }

  int k_;
};

// ---------------------------------------------------------------------------
// Simple s-t paths in an undirected multigraph.

class StPathClass final : public DecisionClass {
 public:
  explicit StPathClass(const DecisionClassSpec& spec)
      : DecisionClass(ClassKind::STPath, static_cast<int>(spec.edges.size())),
        num_vertices_(spec.num_vertices),
        source_(spec.source),
        sink_(spec.sink),
        edges_(spec.edges),
        adjacency_(static_cast<std::size_t>(spec.num_vertices)) {
    for (int a = 0; a < n_; ++a) {
      adjacency_[static_cast<std::size_t>(edges_[a].u)].push_back(a);
      if (edges_[a].v != edges_[a].u)
        adjacency_[static_cast<std::size_t>(edges_[a].v)].push_back(a);
    }
    if (!bfs_path(full_mask(n_), -kInf, WeightVector(static_cast<std::size_t>(n_), 0.0)))
      throw ValidationError("st_path class is empty: sink unreachable");
  }

  std::optional<SuperArm> max_oracle(const ArmMask& allowed,
                                     const WeightVector& v) const override {
    check_weights(v, n_);
    Dsu dsu(num_vertices_);
    for (int a : arms_by_weight_desc(allowed, v)) {
      dsu.unite(edges_[a].u, edges_[a].v);
      if (dsu.find(source_) == dsu.find(sink_)) {
        // Largest threshold at which s and t connect; any path inside the
        // subgraph of weight >= threshold attains exactly this bottleneck.
        auto path = bfs_path(allowed, v[static_cast<std::size_t>(a)], v);
        assert(path.has_value());
        return path;
      }
    }
    return std::nullopt;
  }

  std::optional<SuperArm> exist_oracle(const ArmMask& allowed,
                                       int arm) const override {
    require_allowed(allowed, arm);
    return disjoint_path_witness(allowed, arm);
  }

  std::vector<SuperArm> enumerate(std::size_t cap) const override {
    std::vector<SuperArm> out;
    std::vector<char> visited(static_cast<std::size_t>(num_vertices_), 0);
    std::vector<int> cur;
    enumerate_rec(source_, visited, cur, cap, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // BFS restricted to allowed arms of weight >= threshold.
  std::optional<SuperArm> bfs_path(const ArmMask& allowed, double threshold,
                                   const WeightVector& v) const {
    std::vector<int> parent_arm(static_cast<std::size_t>(num_vertices_), -1);
    std::vector<char> seen(static_cast<std::size_t>(num_vertices_), 0);
    std::deque<int> queue{source_};
    seen[static_cast<std::size_t>(source_)] = 1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (x == sink_) break;
      for (int a : adjacency_[static_cast<std::size_t>(x)]) {
        if (!allowed[static_cast<std::size_t>(a)]) continue;
        if (v[static_cast<std::size_t>(a)] < threshold) continue;
        const int y = edges_[a].u == x ? edges_[a].v : edges_[a].u;
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = 1;
        parent_arm[static_cast<std::size_t>(y)] = a;
        queue.push_back(y);
      }
    }
    if (!seen[static_cast<std::size_t>(sink_)]) return std::nullopt;
    std::vector<int> arms;
    for (int x = sink_; x != source_;) {
      const int a = parent_arm[static_cast<std::size_t>(x)];
      arms.push_back(a);
      x = edges_[a].u == x ? edges_[a].v : edges_[a].u;
    }
    return SuperArm(std::move(arms));
  }

  // Membership query via two vertex-disjoint paths: put a virtual vertex in
  // the middle of `arm`, another between s and t, and ask for a 2-unit
  // vertex-capacitated flow between the two virtual vertices.
  std::optional<SuperArm> disjoint_path_witness(const ArmMask& allowed,
                                                int arm) const {
    struct Arc {
      int to;
      int cap;
      int arm;
      int rev;
      bool fwd;
    };
    const int node_count = 2 * num_vertices_ + 2;
    const int w_node = 2 * num_vertices_;
    const int z_node = 2 * num_vertices_ + 1;
    std::vector<std::vector<Arc>> g(static_cast<std::size_t>(node_count));
    auto add_arc = [&](int from, int to, int arm_id) {
      g[static_cast<std::size_t>(from)].push_back(
          {to, 1, arm_id,
           static_cast<int>(g[static_cast<std::size_t>(to)].size()), true});
      g[static_cast<std::size_t>(to)].push_back(
          {from, 0, arm_id,
           static_cast<int>(g[static_cast<std::size_t>(from)].size()) - 1,
           false});
    };
    auto in_of = [](int x) { return 2 * x; };
    auto out_of = [](int x) { return 2 * x + 1; };

    for (int x = 0; x < num_vertices_; ++x) add_arc(in_of(x), out_of(x), -1);
    for (int a = 0; a < n_; ++a) {
      if (!allowed[static_cast<std::size_t>(a)] || a == arm) continue;
      add_arc(out_of(edges_[a].u), in_of(edges_[a].v), a);
      add_arc(out_of(edges_[a].v), in_of(edges_[a].u), a);
    }
    add_arc(w_node, in_of(edges_[arm].u), arm);
    add_arc(w_node, in_of(edges_[arm].v), arm);
    add_arc(out_of(source_), z_node, -1);
    add_arc(out_of(sink_), z_node, -1);

    auto augment = [&]() -> bool {
      std::vector<std::pair<int, int>> pred(
          static_cast<std::size_t>(node_count), {-1, -1});
      std::deque<int> queue{w_node};
      pred[static_cast<std::size_t>(w_node)] = {w_node, -1};
      while (!queue.empty() && pred[static_cast<std::size_t>(z_node)].first < 0) {
        const int x = queue.front();
        queue.pop_front();
        auto& arcs = g[static_cast<std::size_t>(x)];
        for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
          const Arc& arc = arcs[static_cast<std::size_t>(i)];
          if (arc.cap <= 0 || pred[static_cast<std::size_t>(arc.to)].first >= 0)
            continue;
          pred[static_cast<std::size_t>(arc.to)] = {x, i};
          queue.push_back(arc.to);
        }
      }
      if (pred[static_cast<std::size_t>(z_node)].first < 0) return false;
      for (int x = z_node; x != w_node;) {
        auto [from, idx] = pred[static_cast<std::size_t>(x)];
        Arc& arc = g[static_cast<std::size_t>(from)][static_cast<std::size_t>(idx)];
        arc.cap -= 1;
        g[static_cast<std::size_t>(arc.to)][static_cast<std::size_t>(arc.rev)].cap += 1;
        x = from;
      }
      return true;
    };

    if (!augment() || !augment()) return std::nullopt;

    // Walk the two unit paths of the flow, collecting arm labels and skipping
    // any circulation the augmentations may have left behind.
    std::vector<int> arms{arm};
    for (int walk = 0; walk < 2; ++walk) {
      int x = w_node;
      while (x != z_node) {
        bool advanced = false;
        for (Arc& arc : g[static_cast<std::size_t>(x)]) {
          if (!arc.fwd || arc.cap != 0) continue;  // saturated forward arc
          arc.cap += 1;
          g[static_cast<std::size_t>(arc.to)][static_cast<std::size_t>(arc.rev)]
              .cap -= 1;
          if (arc.arm >= 0) arms.push_back(arc.arm);
          x = arc.to;
          advanced = true;
          break;
        }
        if (!advanced) return std::nullopt;  // unreachable for a valid 2-flow
      }
    }
    return SuperArm(std::move(arms));
  }

  void enumerate_rec(int x, std::vector<char>& visited, std::vector<int>& cur,
                     std::size_t cap, std::vector<SuperArm>& out) const {
    if (x == sink_) {
      if (out.size() >= cap)
        throw CapacityError("st_path enumeration exceeds cap");
      out.emplace_back(cur);
      return;
    }
    visited[static_cast<std::size_t>(x)] = 1;
    for (int a : adjacency_[static_cast<std::size_t>(x)]) {
      const int y = edges_[a].u == x ? edges_[a].v : edges_[a].u;
      if (visited[static_cast<std::size_t>(y)]) continue;
      cur.push_back(a);
      enumerate_rec(y, visited, cur, cap, out);
      cur.pop_back();
    }
    visited[static_cast<std::size_t>(x)] = 0;
  }

  int num_vertices_;
  int source_;
  int sink_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<int>> adjacency_;  // arm ids per vertex
};

// ---------------------------------------------------------------------------
// Maximum-cardinality matchings of a bipartite multigraph.

class MatchingClass final : public DecisionClass {
 public:
  explicit MatchingClass(const DecisionClassSpec& spec)
      : DecisionClass(ClassKind::BipartiteMatching,
                      static_cast<int>(spec.edges.size())),
        num_vertices_(spec.num_vertices),
        edges_(spec.edges),
        adjacency_(static_cast<std::size_t>(spec.num_vertices)) {
    for (int a = 0; a < n_; ++a) {
      if (edges_[a].u == edges_[a].v)
        throw ValidationError("matching graph cannot contain self loops");
      adjacency_[static_cast<std::size_t>(edges_[a].u)].push_back(a);
      adjacency_[static_cast<std::size_t>(edges_[a].v)].push_back(a);
    }
    const std::vector<int> color = two_color();
    std::vector<int> side0, side1;
    for (int x = 0; x < num_vertices_; ++x)
      (color[static_cast<std::size_t>(x)] == 0 ? side0 : side1).push_back(x);
    iteration_side_ = side0.size() <= side1.size() ? side0 : side1;
    full_cardinality_ = matching_size(full_mask(n_), -kInf,
                                      WeightVector(static_cast<std::size_t>(n_), 0.0),
                                      -1, -1, nullptr);
    if (full_cardinality_ < 1)
      throw ValidationError("matching class is empty: graph has no edges");
  }

  std::optional<SuperArm> max_oracle(const ArmMask& allowed,
                                     const WeightVector& v) const override {
    check_weights(v, n_);
    std::vector<double> values;
    for (int a = 0; a < n_; ++a)
      if (allowed[static_cast<std::size_t>(a)])
        values.push_back(v[static_cast<std::size_t>(a)]);
    std::sort(values.begin(), values.end(), std::greater<double>());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    // Full-cardinality feasibility above a threshold is monotone in the
    // threshold, so binary-search the largest feasible one.
    int lo = 0, hi = static_cast<int>(values.size()) - 1, best = -1;
    while (lo <= hi) {
      const int mid = (lo + hi) / 2;
      if (matching_size(allowed, values[static_cast<std::size_t>(mid)], v, -1,
                        -1, nullptr) == full_cardinality_) {
        best = mid;
        hi = mid - 1;
      } else {
        lo = mid + 1;
      }
    }
    if (best < 0) return std::nullopt;
    std::vector<int> arms;
    matching_size(allowed, values[static_cast<std::size_t>(best)], v, -1, -1,
                  &arms);
    return SuperArm(std::move(arms));
  }

  std::optional<SuperArm> exist_oracle(const ArmMask& allowed,
                                       int arm) const override {
    require_allowed(allowed, arm);
    std::vector<int> arms;
    const int size = matching_size(
        allowed, -kInf, WeightVector(static_cast<std::size_t>(n_), 0.0),
        edges_[arm].u, edges_[arm].v, &arms);
    if (size != full_cardinality_ - 1) return std::nullopt;
    arms.push_back(arm);
    return SuperArm(std::move(arms));
  }

  std::vector<SuperArm> enumerate(std::size_t cap) const override {
    std::vector<SuperArm> out;
    std::vector<char> used(static_cast<std::size_t>(num_vertices_), 0);
    std::vector<int> cur;
    enumerate_rec(0, used, cur, cap, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<int> two_color() const {
    std::vector<int> color(static_cast<std::size_t>(num_vertices_), -1);
    for (int root = 0; root < num_vertices_; ++root) {
      if (color[static_cast<std::size_t>(root)] >= 0) continue;
      color[static_cast<std::size_t>(root)] = 0;
      std::deque<int> queue{root};
      while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int a : adjacency_[static_cast<std::size_t>(x)]) {
          const int y = edges_[a].u == x ? edges_[a].v : edges_[a].u;
          if (color[static_cast<std::size_t>(y)] < 0) {
            color[static_cast<std::size_t>(y)] =
                1 - color[static_cast<std::size_t>(x)];
            queue.push_back(y);
          } else if (color[static_cast<std::size_t>(y)] ==
                     color[static_cast<std::size_t>(x)]) {
            throw ValidationError("matching graph is not bipartite");
          }
        }
      }
    }
    return color;
  }

  // Kuhn's augmenting paths over arms that are allowed and at least
  // `threshold` heavy, with two optional removed vertices.
  int matching_size(const ArmMask& allowed, double threshold,
                    const WeightVector& v, int skip_a, int skip_b,
                    std::vector<int>* arms_out) const {
    std::vector<int> match_arm(static_cast<std::size_t>(num_vertices_), -1);
    std::vector<char> visited(static_cast<std::size_t>(num_vertices_), 0);

    auto usable = [&](int a) {
      if (!allowed[static_cast<std::size_t>(a)]) return false;
      if (v[static_cast<std::size_t>(a)] < threshold) return false;
      const GraphEdge& e = edges_[a];
      return e.u != skip_a && e.u != skip_b && e.v != skip_a && e.v != skip_b;
    };

    std::function<bool(int)> try_augment = [&](int x) -> bool {
      for (int a : adjacency_[static_cast<std::size_t>(x)]) {
        if (!usable(a)) continue;
        const int y = edges_[a].u == x ? edges_[a].v : edges_[a].u;
        if (visited[static_cast<std::size_t>(y)]) continue;
        visited[static_cast<std::size_t>(y)] = 1;
        const int occupied = match_arm[static_cast<std::size_t>(y)];
        const int partner =
            occupied < 0
                ? -1
                : (edges_[occupied].u == y ? edges_[occupied].v
                                           : edges_[occupied].u);
        if (occupied < 0 || try_augment(partner)) {
          match_arm[static_cast<std::size_t>(y)] = a;
          match_arm[static_cast<std::size_t>(x)] = a;
          return true;
        }
      }
      return false;
    };

    int size = 0;
    for (int x : iteration_side_) {
      if (x == skip_a || x == skip_b) continue;
      std::fill(visited.begin(), visited.end(), 0);
      if (try_augment(x)) ++size;
    }
    if (arms_out) {
      arms_out->clear();
      for (int x : iteration_side_)
        if (match_arm[static_cast<std::size_t>(x)] >= 0)
          arms_out->push_back(match_arm[static_cast<std::size_t>(x)]);
    }
    return size;
  }

  void enumerate_rec(std::size_t idx, std::vector<char>& used,
                     std::vector<int>& cur, std::size_t cap,
                     std::vector<SuperArm>& out) const {
    if (static_cast<int>(cur.size()) == full_cardinality_) {
      if (out.size() >= cap)
        throw CapacityError("matching enumeration exceeds cap");
      out.emplace_back(cur);
      return;
    }
    const int remaining = static_cast<int>(iteration_side_.size() - idx);
    if (static_cast<int>(cur.size()) + remaining < full_cardinality_) return;
    const int x = iteration_side_[idx];
    for (int a : adjacency_[static_cast<std::size_t>(x)]) {
      const int y = edges_[a].u == x ? edges_[a].v : edges_[a].u;
      if (used[static_cast<std::size_t>(y)]) continue;
      used[static_cast<std::size_t>(y)] = 1;
      cur.push_back(a);
      enumerate_rec(idx + 1, used, cur, cap, out);
      cur.pop_back();
      used[static_cast<std::size_t>(y)] = 0;
    }
    enumerate_rec(idx + 1, used, cur, cap, out);  // leave x unmatched
  }

  int num_vertices_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> iteration_side_;
  int full_cardinality_ = 0;
};

// ---------------------------------------------------------------------------
// Spanning trees of an undirected multigraph.

class SpanningTreeClass final : public DecisionClass {
 public:
  explicit SpanningTreeClass(const DecisionClassSpec& spec)
      : DecisionClass(ClassKind::SpanningTree,
                      static_cast<int>(spec.edges.size())),
        num_vertices_(spec.num_vertices),
        edges_(spec.edges) {
    if (num_vertices_ < 2)
      throw ValidationError("spanning_tree needs at least two vertices");
    Dsu dsu(num_vertices_);
    int components = num_vertices_;
    for (const GraphEdge& e : edges_)
      if (dsu.unite(e.u, e.v)) --components;
    if (components != 1)
      throw ValidationError("spanning_tree class is empty: graph disconnected");
  }

  std::optional<SuperArm> max_oracle(const ArmMask& allowed,
                                     const WeightVector& v) const override {
    check_weights(v, n_);
    Dsu dsu(num_vertices_);
    std::vector<int> chosen;
    for (int a : arms_by_weight_desc(allowed, v)) {
      if (dsu.unite(edges_[a].u, edges_[a].v)) {
        chosen.push_back(a);
        if (static_cast<int>(chosen.size()) == num_vertices_ - 1)
          return SuperArm(std::move(chosen));
      }
    }
    return std::nullopt;
  }

  std::optional<SuperArm> exist_oracle(const ArmMask& allowed,
                                       int arm) const override {
    require_allowed(allowed, arm);
    if (edges_[arm].u == edges_[arm].v) return std::nullopt;
    Dsu dsu(num_vertices_);
    dsu.unite(edges_[arm].u, edges_[arm].v);
    std::vector<int> chosen{arm};
    for (int a = 0; a < n_; ++a) {
      if (!allowed[static_cast<std::size_t>(a)] || a == arm) continue;
      if (dsu.unite(edges_[a].u, edges_[a].v)) {
        chosen.push_back(a);
        if (static_cast<int>(chosen.size()) == num_vertices_ - 1)
          return SuperArm(std::move(chosen));
      }
    }
    return std::nullopt;
  }

  std::vector<SuperArm> enumerate(std::size_t cap) const override {
    std::vector<SuperArm> out;
    Dsu dsu(num_vertices_);
    std::vector<int> cur;
    enumerate_rec(0, dsu, cur, cap, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void enumerate_rec(int idx, Dsu& dsu, std::vector<int>& cur, std::size_t cap,
                     std::vector<SuperArm>& out) const {
    if (static_cast<int>(cur.size()) == num_vertices_ - 1) {
      if (out.size() >= cap)
        throw CapacityError("spanning_tree enumeration exceeds cap");
      out.emplace_back(cur);
      return;
    }
    if (idx == n_) return;
    if (n_ - idx < num_vertices_ - 1 - static_cast<int>(cur.size())) return;
    if (dsu.find(edges_[idx].u) != dsu.find(edges_[idx].v)) {
      Dsu next = dsu;
      next.unite(edges_[idx].u, edges_[idx].v);
      cur.push_back(idx);
      enumerate_rec(idx + 1, next, cur, cap, out);
      cur.pop_back();
    }
    enumerate_rec(idx + 1, dsu, cur, cap, out);
  }

  int num_vertices_;
  std::vector<GraphEdge> edges_;
};

}  // namespace

void DecisionClass::require_allowed(const ArmMask& allowed, int arm) const {
  if (arm < 0 || arm >= n_)
    throw std::domain_error("exist_oracle: arm index out of range");
  if (static_cast<int>(allowed.size()) != n_)
    throw std::domain_error("exist_oracle: allowed mask length mismatch");
  if (!allowed[static_cast<std::size_t>(arm)])
    throw std::domain_error("exist_oracle: arm is not in the allowed set");
}

std::shared_ptr<const DecisionClass> make_decision_class(
    const DecisionClassSpec& spec, int n) {
  if (spec.kind != ClassKind::TopK &&
      static_cast<int>(spec.edges.size()) != n)
    throw ValidationError("edge list must label exactly one edge per arm");
  switch (spec.kind) {
    case ClassKind::TopK:
      return std::make_shared<TopKClass>(n, spec.k);
    case ClassKind::STPath:
      return std::make_shared<StPathClass>(spec);
    case ClassKind::BipartiteMatching:
      return std::make_shared<MatchingClass>(spec);
    case ClassKind::SpanningTree:
      return std::make_shared<SpanningTreeClass>(spec);
  }
  throw ValidationError("unknown decision class kind");
}

std::shared_ptr<const DecisionClass> make_decision_class(
    const Instance& instance) {
  check_instance(instance);
  return make_decision_class(instance.class_spec, instance.n);
}

}  // namespace cpeb
