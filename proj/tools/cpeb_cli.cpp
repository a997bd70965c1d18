// Command-line front end: instance generation, validation, gap profiles,
// batch fixed-confidence / fixed-budget experiment runs, and the randomized
// oracle cross-check suite.
//
// Exit codes: 0 success, 2 validation failure, 1 runtime error.

#include <cstdio>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpeb/analysis.hpp"
#include "cpeb/decision_class.hpp"
#include "cpeb/experiment.hpp"
#include "cpeb/generators.hpp"
#include "cpeb/instance_io.hpp"
#include "cpeb/random_instances.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitValidation = 2;

struct ConfidenceFlags {
  double delta = 0.0;
  double log_inv_delta = 0.0;

  std::optional<cpeb::Confidence> resolve() const {
    if (delta > 0.0 && log_inv_delta > 0.0)
      throw cpeb::ValidationError("use either --delta or --log-inv-delta");
    if (delta > 0.0) return cpeb::Confidence::from_delta(delta);
    if (log_inv_delta > 0.0)
      return cpeb::Confidence::from_log_inv(log_inv_delta);
    return std::nullopt;
  }
};

nlohmann::json profile_to_json(const cpeb::GapProfile& profile) {
  nlohmann::json out;
  out["m_star"] = profile.m_star.arms();
  out["opt"] = profile.opt;
  out["second_best"] = profile.second_best;
  auto dump_gaps = [](const std::vector<double>& gaps) {
    nlohmann::json arr = nlohmann::json::array();
    for (double g : gaps) {
      if (std::isnan(g))
        arr.push_back(nullptr);
      else if (std::isinf(g))
        arr.push_back("inf");
      else
        arr.push_back(g);
    }
    return arr;
  };
  out["delta_c"] = dump_gaps(profile.delta_c);
  out["delta_b"] = dump_gaps(profile.delta_b);
  nlohmann::json roles = nlohmann::json::array();
  for (cpeb::ArmRole role : profile.partition)
    roles.push_back(cpeb::to_string(role));
  out["partition"] = std::move(roles);
  out["h_v"] = profile.h_v;
  out["h_e"] = profile.h_e;
  out["h_b"] = profile.h_b;
  return out;
}

int run_oracle_check(long long rounds, std::uint64_t seed) {
  using cpeb::ClassKind;
  bool ok = true;
  for (ClassKind kind : {ClassKind::TopK, ClassKind::STPath,
                         ClassKind::BipartiteMatching, ClassKind::SpanningTree}) {
    const auto report =
        cpeb::check_oracles_against_brute_force(kind, rounds, seed);
    std::printf("%-20s instances=%lld skipped=%lld queries=%lld %s\n",
                cpeb::to_string(kind).c_str(), report.instances_checked,
                report.instances_skipped, report.queries_checked,
                report.ok ? "ok" : report.first_failure.c_str());
    ok = ok && report.ok;
  }
  return ok ? kExitOk : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bottleneck pure-exploration simulator"};
  app.require_subcommand(1);

  // --- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a built-in instance");
  std::string gen_name = "diamond";
  double gen_delta_min = -1.0;
  double gen_noise = 1.0;
  std::string gen_out;
  gen->add_option("--name", gen_name,
                  "diamond | path | matching | air_route | figure1");
  gen->add_option("--delta-min", gen_delta_min, "gap parameter (path/matching)");
  gen->add_option("--noise-scale", gen_noise, "sub-Gaussian scale R");
  gen->add_option("--out", gen_out, "output instance JSON path")->required();

  // --- validate ------------------------------------------------------------
  auto* validate = app.add_subcommand("validate", "check instance invariants");
  std::string validate_path;
  validate->add_option("--instance", validate_path)->required();

  // --- gaps ----------------------------------------------------------------
  auto* gaps = app.add_subcommand("gaps", "print the gap/hardness profile");
  std::string gaps_path;
  gaps->add_option("--instance", gaps_path)->required();

  // --- run-fc / run-fb -------------------------------------------------------
  auto add_run_flags = [](CLI::App* cmd, cpeb::ExperimentConfig& config,
                          std::string& instance_path, ConfidenceFlags& conf) {
    cmd->add_option("--instance", instance_path)->required();
    cmd->add_option("--trials", config.trials);
    cmd->add_option("--seed", config.base_seed);
    cmd->add_option("--jobs", config.jobs);
    cmd->add_option("--out", config.out_prefix,
                    "write <prefix>.csv and <prefix>.json");
    cmd->add_option("--obs-log", config.observation_log,
                    "dump every observation to this CSV");
    cmd->add_option("--delta", conf.delta);
    cmd->add_option("--log-inv-delta", conf.log_inv_delta, "ln(1/delta)");
  };

  cpeb::ExperimentConfig fc_config;
  std::string fc_instance_path;
  ConfidenceFlags fc_conf;
  auto* run_fc = app.add_subcommand("run-fc", "fixed-confidence trials");
  fc_config.algo = "blucb";
  run_fc->add_option("--algo", fc_config.algo,
                     "blucb | blucb-verify | blucb-parallel | uniform-fc | genlucb");
  run_fc->add_option("--epsilon", fc_config.epsilon, "PAC slack");
  run_fc->add_option("--reward", fc_config.reward,
                     "genlucb reward: bottleneck | linear | quadratic");
  add_run_flags(run_fc, fc_config, fc_instance_path, fc_conf);

  cpeb::ExperimentConfig fb_config;
  std::string fb_instance_path;
  ConfidenceFlags fb_conf;
  auto* run_fb = app.add_subcommand("run-fb", "fixed-budget trials");
  fb_config.algo = "bsar";
  run_fb->add_option("--algo", fb_config.algo, "bsar | uniform-fb");
  run_fb->add_option("--budget", fb_config.budget)->required();
  add_run_flags(run_fb, fb_config, fb_instance_path, fb_conf);

  // --- oracle-check ----------------------------------------------------------
  auto* oracle_check =
      app.add_subcommand("oracle-check", "randomized oracle cross-check");
  long long oc_rounds = 1000;
  std::uint64_t oc_seed = 1;
  oracle_check->add_option("--rounds", oc_rounds, "instances per class kind");
  oracle_check->add_option("--seed", oc_seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      std::map<std::string, double> params{{"noise_scale", gen_noise}};
      if (gen_delta_min > 0.0) params["delta_min"] = gen_delta_min;
      const cpeb::Instance instance = cpeb::generate_instance(gen_name, params);
      cpeb::save_instance(instance, gen_out);
      std::printf("wrote %s (n=%d, kind=%s)\n", gen_out.c_str(), instance.n,
                  cpeb::to_string(instance.class_spec.kind).c_str());
      return kExitOk;
    }
    if (validate->parsed()) {
      const cpeb::Instance instance = cpeb::load_instance(validate_path);
      const auto cls = cpeb::make_decision_class(instance);
      const auto report = cpeb::validate_unique_optimum(instance, *cls);
      std::printf("%s: %s\n", report.unique ? "valid" : "invalid",
                  report.diagnostic.c_str());
      return report.unique ? kExitOk : kExitValidation;
    }
    if (gaps->parsed()) {
      const cpeb::Instance instance = cpeb::load_instance(gaps_path);
      const auto cls = cpeb::make_decision_class(instance);
      const auto profile = cpeb::compute_gap_profile(instance, *cls);
      std::printf("%s\n", profile_to_json(profile).dump(2).c_str());
      return kExitOk;
    }
    if (run_fc->parsed() || run_fb->parsed()) {
      const bool fixed_confidence = run_fc->parsed();
      cpeb::ExperimentConfig& config = fixed_confidence ? fc_config : fb_config;
      const ConfidenceFlags& conf = fixed_confidence ? fc_conf : fb_conf;
      const std::string& path =
          fixed_confidence ? fc_instance_path : fb_instance_path;
      if (fixed_confidence && !cpeb::is_fixed_confidence_algo(config.algo))
        throw cpeb::ValidationError("run-fc cannot run " + config.algo);
      if (!fixed_confidence && !cpeb::is_fixed_budget_algo(config.algo))
        throw cpeb::ValidationError("run-fb cannot run " + config.algo);
      config.instance = cpeb::load_instance(path);
      config.confidence = conf.resolve();
      const auto result = cpeb::run_experiment(config);
      std::printf("%s", cpeb::summary_to_json(config, result.summary).c_str());
      return kExitOk;
    }
    if (oracle_check->parsed()) return run_oracle_check(oc_rounds, oc_seed);
  } catch (const cpeb::ValidationError& err) {
    std::fprintf(stderr, "validation error: %s\n", err.what());
    return kExitValidation;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return kExitRuntime;
  }
  return kExitOk;
}
