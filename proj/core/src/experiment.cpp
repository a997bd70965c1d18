#include "cpeb/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cpeb/decision_class.hpp"
#include "cpeb/fb.hpp"
#include "cpeb/fc.hpp"
#include "cpeb/gen.hpp"

namespace cpeb {
namespace {

bool algo_is(const std::string& algo, std::initializer_list<const char*> names) {
  for (const char* name : names)
    if (algo == name) return true;
  return false;
}

RewardFunction reward_by_name(const std::string& name, const Instance& instance) {
  if (name == "bottleneck") return make_bottleneck_reward();
  double max_size = static_cast<double>(instance.n);
  if (name == "linear") return make_linear_reward(max_size);
  if (name == "quadratic") {
    double bound = 0.0;
    for (double w : instance.means) bound = std::max(bound, std::abs(w));
    return make_quadratic_reward(2.0 * bound + 1.0,
                                 2.0 * (2.0 * bound + 1.0) * max_size);
  }
  throw ValidationError("unknown reward function: " + name);
}

std::string join_longs(const std::vector<long long>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ';';
    out << values[i];
  }
  return out.str();
}

std::string join_arms(const SuperArm& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.arms().size(); ++i) {
    if (i > 0) out << ';';
    out << m.arms()[i];
  }
  return out.str();
}

}  // namespace

bool is_fixed_confidence_algo(const std::string& algo) {
  return algo_is(algo, {"blucb", "blucb-verify", "blucb-parallel",
                        "uniform-fc", "genlucb"});
}

bool is_fixed_budget_algo(const std::string& algo) {
  return algo_is(algo, {"bsar", "uniform-fb"});
}

std::string records_to_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  out << "trial,seed,answer,correct,error,total_pulls,pulls_on_unnecessary,"
         "pulls_per_arm,concentration_checked,concentration_held\n";
  for (const TrialRecord& r : records) {
    out << r.trial << ',' << r.seed << ',' << join_arms(r.answer) << ','
        << (r.correct ? 1 : 0) << ',' << (r.error ? 1 : 0) << ','
        << r.total_pulls << ',' << r.pulls_on_unnecessary << ','
        << join_longs(r.pulls_per_arm) << ','
        << (r.concentration_checked ? 1 : 0) << ','
        << (r.concentration_held ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string summary_to_json(const ExperimentConfig& config,
                            const ExperimentSummary& summary) {
  nlohmann::json out;
  out["algo"] = config.algo;
  out["instance"] = {{"n", config.instance.n},
                     {"kind", to_string(config.instance.class_spec.kind)}};
  if (config.confidence) out["log_inv_delta"] = config.confidence->log_inv;
  if (is_fixed_confidence_algo(config.algo)) out["epsilon"] = config.epsilon;
  if (is_fixed_budget_algo(config.algo)) out["budget"] = config.budget;
  if (config.algo == "genlucb") out["reward"] = config.reward;
  out["trials"] = summary.trials;
  out["base_seed"] = config.base_seed;
  out["jobs"] = config.jobs;
  out["errors"] = summary.errors;
  out["error_rate"] = summary.error_rate;
  out["mean_total_pulls"] = summary.mean_total_pulls;
  out["std_total_pulls"] = summary.std_total_pulls;
  out["ci95_half_width"] = summary.ci95_half_width;
  out["mean_pulls_on_unnecessary"] = summary.mean_pulls_on_unnecessary;
  out["mean_wall_time_ms"] = summary.mean_wall_time_ms;
  out["total_wall_time_ms"] = summary.total_wall_time_ms;
  out["concentration_violations"] = summary.concentration_violations;
  return out.dump(2) + "\n";
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  check_instance(config.instance);
  const bool fc = is_fixed_confidence_algo(config.algo);
  const bool fb = is_fixed_budget_algo(config.algo);
  if (!fc && !fb) throw ValidationError("unknown algorithm: " + config.algo);
  if (fc && !config.confidence)
    throw ValidationError(config.algo + " needs a confidence parameter");
  if (fb && config.budget <= 0)
    throw ValidationError(config.algo + " needs a positive budget");
  if (config.trials < 1) throw ValidationError("trial count must be >= 1");

  const auto cls = make_decision_class(config.instance);
  ExperimentResult result;
  result.profile = compute_gap_profile(config.instance, *cls);
  const auto instance_ptr = std::make_shared<const Instance>(config.instance);
  const RewardFunction reward = config.algo == "genlucb"
                                    ? reward_by_name(config.reward, config.instance)
                                    : RewardFunction{};

  std::vector<double> delta_b_copy = result.profile.delta_b;
  const SuperArm m_star = result.profile.m_star;

  std::ofstream obs_stream;
  std::mutex obs_mutex;
  const bool log_observations = !config.observation_log.empty();
  if (log_observations) {
    obs_stream.open(config.observation_log);
    if (!obs_stream)
      throw std::runtime_error("cannot write observation log: " +
                               config.observation_log);
    obs_stream << "trial,t,arm,reward\n";
  }

  result.records.assign(static_cast<std::size_t>(config.trials), TrialRecord{});

  auto run_trial = [&](int index) {
    TrialRecord record;
    record.trial = index;
    record.seed = config.base_seed + static_cast<std::uint64_t>(index);
    Environment env(instance_ptr, record.seed);
    if (log_observations) {
      env.set_observer([&, index](long long t, int arm, double reward_value) {
        std::lock_guard<std::mutex> lock(obs_mutex);
        obs_stream << index << ',' << t << ',' << arm << ',' << reward_value
                   << '\n';
      });
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      if (fc) {
        FcOptions options;
        options.epsilon = config.epsilon;
        options.true_means = &instance_ptr->means;
        FcResult r;
        if (config.algo == "blucb")
          r = blucb(env, *cls, *config.confidence, options);
        else if (config.algo == "blucb-verify")
          r = blucb_verify(env, *cls, *config.confidence, options);
        else if (config.algo == "blucb-parallel")
          r = blucb_parallel(env, *cls, *config.confidence, options);
        else if (config.algo == "uniform-fc")
          r = uniform_fc(env, *cls, *config.confidence, options);
        else {
          GenOptions gen_options;
          gen_options.true_means = &instance_ptr->means;
          r = genlucb(env, *cls, reward, *config.confidence, gen_options);
        }
        record.answer = r.answer;
        record.total_pulls = r.total_pulls;
        record.pulls_per_arm = r.pulls_per_arm;
        record.concentration_checked = r.concentration_checked;
        record.concentration_held = r.concentration_held;
      } else {
        FbResult r;
        if (config.algo == "bsar") {
          FbOptions options;
          options.true_means = &instance_ptr->means;
          options.optimal = &m_star;
          options.fixed_budget_gaps = &delta_b_copy;
          r = bsar(env, *cls, config.budget, options);
        } else {
          r = uniform_fb(env, *cls, config.budget);
        }
        record.answer = r.answer;
        record.error = !r.completed;
        record.total_pulls = r.total_pulls;
        record.pulls_per_arm = r.pulls_per_arm;
        record.concentration_checked = r.concentration_checked;
        record.concentration_held = r.concentration_held;
      }
    } catch (const std::exception& err) {
      record.error = true;
      warn("trial " + std::to_string(index) + " failed: " + err.what());
    }
    const auto stop = std::chrono::steady_clock::now();
    record.wall_time_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    record.correct = !record.error && record.answer == m_star;
    for (std::size_t e = 0; e < record.pulls_per_arm.size(); ++e)
      if (result.profile.partition[e] == ArmRole::Unnecessary)
        record.pulls_on_unnecessary += record.pulls_per_arm[e];
    result.records[static_cast<std::size_t>(index)] = std::move(record);
  };

  const int jobs = std::max(1, config.jobs);
  if (jobs == 1 || config.trials == 1) {
    for (int i = 0; i < config.trials; ++i) run_trial(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    const int worker_count = std::min(jobs, config.trials);
    workers.reserve(static_cast<std::size_t>(worker_count));
    for (int w = 0; w < worker_count; ++w)
      workers.emplace_back([&]() {
        for (int i = next.fetch_add(1); i < config.trials;
             i = next.fetch_add(1))
          run_trial(i);
      });
    for (std::thread& worker : workers) worker.join();
  }

  ExperimentSummary& summary = result.summary;
  summary.trials = config.trials;
  double sum = 0.0, sum_sq = 0.0;
  for (const TrialRecord& r : result.records) {
    if (r.error) ++summary.errors;
    if (!r.correct) summary.error_rate += 1.0;
    sum += static_cast<double>(r.total_pulls);
    sum_sq += static_cast<double>(r.total_pulls) *
              static_cast<double>(r.total_pulls);
    summary.mean_pulls_on_unnecessary +=
        static_cast<double>(r.pulls_on_unnecessary);
    summary.total_wall_time_ms += r.wall_time_ms;
    if (r.concentration_checked && !r.concentration_held)
      ++summary.concentration_violations;
  }
  const double count = static_cast<double>(config.trials);
  summary.error_rate /= count;
  summary.mean_total_pulls = sum / count;
  summary.mean_pulls_on_unnecessary /= count;
  summary.mean_wall_time_ms = summary.total_wall_time_ms / count;
  const double variance =
      std::max(0.0, sum_sq / count -
                        summary.mean_total_pulls * summary.mean_total_pulls);
  summary.std_total_pulls = std::sqrt(variance);
  summary.ci95_half_width = 1.96 * summary.std_total_pulls / std::sqrt(count);

  if (!config.out_prefix.empty()) {
    std::ofstream csv(config.out_prefix + ".csv");
    if (!csv)
      throw std::runtime_error("cannot write " + config.out_prefix + ".csv");
    csv << records_to_csv(result.records);
    std::ofstream js(config.out_prefix + ".json");
    if (!js)
      throw std::runtime_error("cannot write " + config.out_prefix + ".json");
    js << summary_to_json(config, summary);
  }
  return result;
}

}  // namespace cpeb
