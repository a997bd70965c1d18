#include <doctest.h>

#include "cpeb/decision_class.hpp"
#include "cpeb/generators.hpp"
#include "cpeb/oracles.hpp"
#include "cpeb/random_instances.hpp"

using namespace cpeb;

namespace {

std::shared_ptr<const DecisionClass> diamond_class() {
  return make_decision_class(make_diamond_instance(0.0));
}

DecisionClassSpec top_k_spec(int k) {
  DecisionClassSpec spec;
  spec.kind = ClassKind::TopK;
  spec.k = k;
  return spec;
}

}  // namespace

TEST_CASE("diamond max_oracle picks the wider path") {
  const auto cls = diamond_class();
  const WeightVector v{1.0, 0.9, 0.8, 0.5};
  const auto best = cls->max_oracle(v);
  REQUIRE(best.has_value());
  CHECK(*best == SuperArm({0, 1}));
  CHECK(min_weight(*best, v) == 0.9);
}

TEST_CASE("top_k max_oracle and ties") {
  const auto cls2 = make_decision_class(top_k_spec(2), 3);
  const auto best = cls2->max_oracle(WeightVector{3, 1, 2});
  REQUIRE(best.has_value());
  CHECK(*best == SuperArm({0, 2}));

  const auto cls1 = make_decision_class(top_k_spec(1), 2);
  const auto tied = cls1->max_oracle(WeightVector{1, 1});
  REQUIRE(tied.has_value());
  CHECK(*tied == SuperArm({0}));
}

TEST_CASE("diamond exist_oracle membership") {
  const auto cls = diamond_class();
  const auto with3 = cls->exist_oracle(full_mask(4), 3);
  REQUIRE(with3.has_value());
  CHECK(*with3 == SuperArm({2, 3}));

  // Removing arm 2 severs the only path through arm 3.
  ArmMask allowed = mask_without(full_mask(4), 2);
  CHECK_FALSE(cls->exist_oracle(allowed, 3).has_value());
  CHECK_THROWS_AS(cls->exist_oracle(allowed, 2), std::domain_error);
}

TEST_CASE("top_k exist_oracle completes with smallest indices") {
  const auto cls = make_decision_class(top_k_spec(2), 3);
  ArmMask allowed(3, 1);
  allowed[2] = 0;
  const auto completed = cls->exist_oracle(allowed, 1);
  REQUIRE(completed.has_value());
  CHECK(*completed == SuperArm({0, 1}));
}

TEST_CASE("enumerate lists each super arm once, sorted") {
  const auto diamond = diamond_class();
  const auto paths = diamond->enumerate();
  REQUIRE(paths.size() == 2);
  CHECK(paths[0] == SuperArm({0, 1}));
  CHECK(paths[1] == SuperArm({2, 3}));

  const auto cls = make_decision_class(top_k_spec(2), 3);
  const auto pairs = cls->enumerate();
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == SuperArm({0, 1}));
  CHECK(pairs[1] == SuperArm({0, 2}));
  CHECK(pairs[2] == SuperArm({1, 2}));

  CHECK_THROWS_AS(cls->enumerate(2), CapacityError);
}

TEST_CASE("the complete 5x3 matching class holds 60 maximum matchings") {
  const Instance instance = make_matching_instance(0.05, 0.0);
  const auto cls = make_decision_class(instance);
  CHECK(cls->enumerate().size() == 60);
}

TEST_CASE("spanning tree class on a 4-cycle") {
  DecisionClassSpec spec;
  spec.kind = ClassKind::SpanningTree;
  spec.num_vertices = 4;
  spec.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  const auto cls = make_decision_class(spec, 4);
  CHECK(cls->enumerate().size() == 4);  // drop any one cycle edge

  const auto best = cls->max_oracle(WeightVector{0.9, 0.1, 0.8, 0.7});
  REQUIRE(best.has_value());
  CHECK(*best == SuperArm({0, 2, 3}));

  const auto with1 = cls->exist_oracle(full_mask(4), 1);
  REQUIRE(with1.has_value());
  CHECK(with1->contains(1));
  CHECK(with1->size() == 3);
}

TEST_CASE("empty classes are rejected at construction") {
  DecisionClassSpec path;
  path.kind = ClassKind::STPath;
  path.num_vertices = 4;
  path.edges = {{0, 1}, {2, 3}};
  path.source = 0;
  path.sink = 3;
  CHECK_THROWS_AS(make_decision_class(path, 2), ValidationError);

  DecisionClassSpec tree;
  tree.kind = ClassKind::SpanningTree;
  tree.num_vertices = 3;
  tree.edges = {{0, 1}};
  CHECK_THROWS_AS(make_decision_class(tree, 1), ValidationError);

  DecisionClassSpec odd_cycle;
  odd_cycle.kind = ClassKind::BipartiteMatching;
  odd_cycle.num_vertices = 3;
  odd_cycle.edges = {{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(make_decision_class(odd_cycle, 3), ValidationError);
}

TEST_CASE("path existence agrees with the brute-force enumerator") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    int n = 0;
    const auto spec = random_class_spec(ClassKind::STPath, rng, &n);
    const auto cls = make_decision_class(spec, n);
    std::vector<SuperArm> all;
    try {
      all = cls->enumerate(64);
    } catch (const CapacityError&) {
      continue;
    }
    for (int e = 0; e < n; ++e) {
      bool member = false;
      for (const SuperArm& m : all)
        if (m.contains(e)) {
          member = true;
          break;
        }
      const auto witness = cls->exist_oracle(full_mask(n), e);
      CHECK(witness.has_value() == member);
      if (witness) {
        CHECK(witness->contains(e));
        CHECK(std::find(all.begin(), all.end(), *witness) != all.end());
      }
    }
  }
}

TEST_CASE("randomized oracle equivalence, small rounds per kind") {
  for (ClassKind kind : {ClassKind::TopK, ClassKind::STPath,
                         ClassKind::BipartiteMatching, ClassKind::SpanningTree}) {
    const auto report = check_oracles_against_brute_force(kind, 120, 99);
    INFO(report.first_failure);
    CHECK(report.ok);
    CHECK(report.instances_checked == 120);
  }
}
