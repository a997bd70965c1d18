#include <doctest.h>

#include <cmath>

#include "cpeb/analysis.hpp"
#include "cpeb/generators.hpp"
#include "cpeb/oracles.hpp"

using namespace cpeb;

namespace {

Instance two_parallel_paths() {
  Instance instance;
  instance.n = 2;
  instance.means = {0.7, 0.7};
  instance.noise_scale = 1.0;
  instance.class_spec.kind = ClassKind::STPath;
  instance.class_spec.num_vertices = 2;
  instance.class_spec.source = 0;
  instance.class_spec.sink = 1;
  instance.class_spec.edges = {{0, 1}, {0, 1}};
  return instance;
}

}  // namespace

TEST_CASE("diamond gap profile") {
  const Instance instance = make_diamond_instance(1.0);
  const auto cls = make_decision_class(instance);
  const GapProfile profile = compute_gap_profile(instance, *cls);

  CHECK(profile.m_star == SuperArm({0, 1}));
  CHECK(profile.opt == 0.9);
  CHECK(profile.second_best == 0.5);
  CHECK(profile.delta_c == std::vector<double>{0.5, 0.4, 0.4, 0.4});
  CHECK(profile.delta_b == std::vector<double>{0.4, 0.4, 0.4, 0.4});
  CHECK(profile.partition ==
        std::vector<ArmRole>{ArmRole::Optimal, ArmRole::Optimal,
                             ArmRole::Necessary, ArmRole::Necessary});
  CHECK(profile.h_v == profile.h_e);  // no unnecessary arms
  // 4 arms, ascending delta_b all 0.4: max_i i / 0.4^2 = 4 / 0.16
  CHECK(profile.h_b == doctest::Approx(25.0));
}

TEST_CASE("matching profile: optimum and brute-force agreement") {
  const Instance instance = make_matching_instance(0.05, 1.0);
  const auto cls = make_decision_class(instance);
  const GapProfile profile = compute_gap_profile(instance, *cls);
  CHECK(profile.opt == doctest::Approx(0.70));
  const auto reference = brute_force_best(*cls, instance.means);
  REQUIRE(reference.has_value());
  CHECK(min_weight(*reference, instance.means) == doctest::Approx(0.70));
  CHECK(profile.m_star == *reference);
}

TEST_CASE("gap consistency against per-arm brute force") {
  const Instance instance = make_figure_one_instance();
  const auto cls = make_decision_class(instance);
  const GapProfile profile = compute_gap_profile(instance, *cls);
  const auto all = cls->enumerate();
  for (int e = 0; e < instance.n; ++e) {
    if (profile.partition[static_cast<std::size_t>(e)] != ArmRole::Necessary)
      continue;
    double best_containing = -kInf;
    for (const SuperArm& m : all)
      if (m.contains(e))
        best_containing = std::max(best_containing, min_weight(m, instance.means));
    CHECK(profile.delta_c[static_cast<std::size_t>(e)] ==
          doctest::Approx(profile.opt - best_containing));
  }
  CHECK(profile.partition == std::vector<ArmRole>{
                                 ArmRole::Optimal, ArmRole::Necessary,
                                 ArmRole::Unnecessary, ArmRole::Necessary,
                                 ArmRole::Unnecessary, ArmRole::Unnecessary});
}

TEST_CASE("hardness scalars: scaling and relabeling invariance") {
  const Instance base = make_diamond_instance(1.0);
  const auto cls = make_decision_class(base);
  const GapProfile profile = compute_gap_profile(base, *cls);

  // Scale all means and R by c: gaps scale by c, hardness stays put.
  const double c = 2.5;
  Instance scaled = base;
  for (double& w : scaled.means) w *= c;
  scaled.noise_scale *= c;
  const GapProfile scaled_profile = compute_gap_profile(scaled, *cls);
  for (int e = 0; e < base.n; ++e) {
    CHECK(scaled_profile.delta_c[static_cast<std::size_t>(e)] ==
          doctest::Approx(c * profile.delta_c[static_cast<std::size_t>(e)]));
    CHECK(scaled_profile.delta_b[static_cast<std::size_t>(e)] ==
          doctest::Approx(c * profile.delta_b[static_cast<std::size_t>(e)]));
  }
  CHECK(scaled_profile.h_v == doctest::Approx(profile.h_v));
  CHECK(scaled_profile.h_e == doctest::Approx(profile.h_e));
  // h_b carries no noise factor of its own, so it scales as 1/c^2; the
  // invariant quantity is R^2 * h_b, which is what the error bounds use.
  CHECK(scaled.noise_scale * scaled.noise_scale * scaled_profile.h_b ==
        doctest::Approx(base.noise_scale * base.noise_scale * profile.h_b));

  // Relabel arms: swap arms 0/3 and 1/2 (swap the two paths).
  Instance relabeled = base;
  relabeled.means = {0.8, 0.5, 1.0, 0.9};
  relabeled.class_spec.edges = {{0, 2}, {2, 3}, {0, 1}, {1, 3}};
  const auto relabeled_cls = make_decision_class(relabeled);
  const GapProfile relabeled_profile =
      compute_gap_profile(relabeled, *relabeled_cls);
  CHECK(relabeled_profile.h_v == doctest::Approx(profile.h_v));
  CHECK(relabeled_profile.h_e == doctest::Approx(profile.h_e));
  CHECK(relabeled_profile.h_b == doctest::Approx(profile.h_b));
  CHECK(profile.h_v <= profile.h_e);
}

TEST_CASE("uniqueness validation") {
  const Instance diamond = make_diamond_instance(1.0);
  CHECK(validate_unique_optimum(diamond, *make_decision_class(diamond)).unique);

  const Instance tied = two_parallel_paths();
  const auto tied_cls = make_decision_class(tied);
  CHECK_FALSE(validate_unique_optimum(tied, *tied_cls).unique);
  CHECK_THROWS_AS(compute_gap_profile(tied, *tied_cls), ValidationError);

  Instance single;
  single.n = 2;
  single.means = {0.4, 0.4};
  single.noise_scale = 1.0;
  single.class_spec.kind = ClassKind::TopK;
  single.class_spec.k = 2;
  CHECK(validate_unique_optimum(single, *make_decision_class(single)).unique);
}

TEST_CASE("arms outside every super arm are excluded from hardness") {
  // Bipartite path l0-r0-l1-r1: the middle edge is in no maximum matching.
  Instance instance;
  instance.n = 3;
  instance.means = {0.9, 0.2, 0.8};
  instance.noise_scale = 1.0;
  instance.class_spec.kind = ClassKind::BipartiteMatching;
  instance.class_spec.num_vertices = 4;
  instance.class_spec.edges = {{0, 1}, {2, 1}, {2, 3}};
  const auto cls = make_decision_class(instance);
  REQUIRE(cls->enumerate().size() == 1);
  const GapProfile profile = compute_gap_profile(instance, *cls);
  CHECK_FALSE(profile.in_some_super_arm[1]);
  CHECK(std::isnan(profile.delta_c[1]));
  CHECK(profile.partition[1] == ArmRole::Unnecessary);
  CHECK(profile.h_e == profile.h_v);
}
