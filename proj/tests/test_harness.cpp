#include <doctest.h>

#include "cpeb/analysis.hpp"
#include "cpeb/decision_class.hpp"
#include "cpeb/experiment.hpp"
#include "cpeb/generators.hpp"
#include "cpeb/instance_io.hpp"

using namespace cpeb;

TEST_CASE("instance JSON round-trips through text") {
  for (const Instance& instance :
       {make_diamond_instance(1.0), make_matching_instance(0.05, 1.0),
        make_figure_one_instance()}) {
    const Instance back = instance_from_json_text(instance_to_json_text(instance));
    CHECK(back.n == instance.n);
    CHECK(back.means == instance.means);
    CHECK(back.noise_scale == instance.noise_scale);
    CHECK(back.class_spec.kind == instance.class_spec.kind);
    CHECK(back.class_spec.edges.size() == instance.class_spec.edges.size());
  }
  CHECK_THROWS_AS(instance_from_json_text("{"), ValidationError);
  CHECK_THROWS_AS(instance_from_json_text("{\"n\": 1}"), ValidationError);
}

TEST_CASE("generators produce validated instances with the expected shape") {
  const Instance path = make_path_instance(0.5);
  CHECK(path.n == 85);
  const auto path_cls = make_decision_class(path);
  const auto paths = path_cls->enumerate();
  CHECK(paths.size() == 6);  // main path plus five branches
  const GapProfile path_profile = compute_gap_profile(path, *path_cls);
  CHECK(path_profile.opt == doctest::Approx(1.0));  // 2 * delta_min
  CHECK(path_profile.second_best == doctest::Approx(0.5));

  const Instance matching = make_matching_instance(0.05);
  CHECK(matching.n == 15);
  const GapProfile matching_profile =
      compute_gap_profile(matching, *make_decision_class(matching));
  CHECK(matching_profile.opt == doctest::Approx(0.70));

  const Instance figure1 = make_figure_one_instance();
  const auto figure1_cls = make_decision_class(figure1);
  CHECK(figure1_cls->enumerate().size() == 3);
  const GapProfile figure1_profile = compute_gap_profile(figure1, *figure1_cls);
  int unnecessary = 0;
  for (ArmRole role : figure1_profile.partition)
    if (role == ArmRole::Unnecessary) ++unnecessary;
  CHECK(unnecessary == 3);

  const Instance air = make_air_route_instance();
  CHECK(air.n == 9);
  for (double w : air.means) {
    CHECK(w >= 0.62);
    CHECK(w <= 1.84);
  }
  const GapProfile air_profile =
      compute_gap_profile(air, *make_decision_class(air));
  CHECK(air_profile.opt == doctest::Approx(1.60));

  CHECK_THROWS_AS(generate_instance("nope"), ValidationError);
}

TEST_CASE("run_experiment scores answers and reproduces byte-identical CSV") {
  ExperimentConfig config;
  config.instance = make_diamond_instance(1.0);
  config.algo = "blucb";
  config.confidence = Confidence::from_delta(0.1);
  config.trials = 8;
  config.base_seed = 500;
  config.jobs = 1;
  const ExperimentResult serial = run_experiment(config);
  CHECK(serial.records.size() == 8);
  for (const TrialRecord& r : serial.records) {
    CHECK(r.total_pulls > 0);
    CHECK(r.correct == (r.answer == serial.profile.m_star));
  }

  ExperimentConfig parallel_config = config;
  parallel_config.jobs = 4;
  const ExperimentResult parallel = run_experiment(parallel_config);
  CHECK(records_to_csv(serial.records) == records_to_csv(parallel.records));

  // Zero-noise runs are always correct, whatever the algorithm.
  ExperimentConfig zero = config;
  zero.instance = make_diamond_instance(0.0);
  for (const char* algo : {"blucb", "uniform-fc", "blucb-parallel"}) {
    zero.algo = algo;
    zero.confidence = Confidence::from_delta(0.005);
    CHECK(run_experiment(zero).summary.error_rate == 0.0);
  }
  zero.algo = "bsar";
  zero.confidence.reset();
  zero.budget = 64;
  CHECK(run_experiment(zero).summary.error_rate == 0.0);
}

TEST_CASE("run_experiment validates algorithm and parameter pairing") {
  ExperimentConfig config;
  config.instance = make_diamond_instance(1.0);
  config.algo = "blucb";
  CHECK_THROWS_AS(run_experiment(config), ValidationError);  // no confidence
  config.algo = "bsar";
  CHECK_THROWS_AS(run_experiment(config), ValidationError);  // no budget
  config.algo = "unknown";
  CHECK_THROWS_AS(run_experiment(config), ValidationError);
}

TEST_CASE("pulls_on_unnecessary counts only unnecessary arms") {
  ExperimentConfig config;
  config.instance = make_figure_one_instance();
  config.algo = "uniform-fc";
  config.confidence = Confidence::from_delta(0.1);
  config.trials = 2;
  config.base_seed = 9;
  const ExperimentResult result = run_experiment(config);
  for (const TrialRecord& r : result.records) {
    long long expected = 0;
    for (std::size_t e = 0; e < r.pulls_per_arm.size(); ++e)
      if (result.profile.partition[e] == ArmRole::Unnecessary)
        expected += r.pulls_per_arm[e];
    CHECK(r.pulls_on_unnecessary == expected);
    CHECK(r.pulls_on_unnecessary > 0);  // round-robin touches all arms
  }
}
