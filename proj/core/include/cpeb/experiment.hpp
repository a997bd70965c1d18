#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpeb/analysis.hpp"
#include "cpeb/env.hpp"
#include "cpeb/types.hpp"

namespace cpeb {

// Algorithm selector for the batch runner. Fixed-confidence algorithms need
// `confidence`; fixed-budget ones need `budget`.
struct ExperimentConfig {
  Instance instance;
  std::string algo;  // blucb | blucb-verify | blucb-parallel | uniform-fc |
                     // genlucb | bsar | uniform-fb
  std::optional<Confidence> confidence;
  double epsilon = 0.0;
  long long budget = 0;
  std::string reward = "bottleneck";  // genlucb: bottleneck | linear | quadratic
  int trials = 1;
  std::uint64_t base_seed = 0;  // trial i uses seed base_seed + i
  int jobs = 1;
  std::string out_prefix;       // when set, writes <prefix>.csv and <prefix>.json
  std::string observation_log;  // when set, dumps trial,t,arm,reward rows
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  SuperArm answer;
  bool correct = false;
  bool error = false;  // the algorithm declared failure or threw
  long long total_pulls = 0;
  std::vector<long long> pulls_per_arm;
  long long pulls_on_unnecessary = 0;
  double wall_time_ms = 0.0;  // summary-only; kept out of the CSV so identical
                              // configs produce byte-identical files
  bool concentration_checked = false;
  bool concentration_held = false;
};

struct ExperimentSummary {
  int trials = 0;
  int errors = 0;
  double error_rate = 0.0;  // wrong answers and failed trials combined
  double mean_total_pulls = 0.0;
  double std_total_pulls = 0.0;
  double ci95_half_width = 0.0;
  double mean_pulls_on_unnecessary = 0.0;
  double mean_wall_time_ms = 0.0;
  double total_wall_time_ms = 0.0;
  int concentration_violations = 0;
};

struct ExperimentResult {
  GapProfile profile;
  std::vector<TrialRecord> records;
  ExperimentSummary summary;
};

bool is_fixed_confidence_algo(const std::string& algo);
bool is_fixed_budget_algo(const std::string& algo);

std::string records_to_csv(const std::vector<TrialRecord>& records);
std::string summary_to_json(const ExperimentConfig& config,
                            const ExperimentSummary& summary);

// Runs `trials` independent trials on a worker pool (deterministic per seed
// independent of the parallelism degree), scores each answer against the
// instance's optimum, and writes the CSV/JSON outputs when configured.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace cpeb
