// Command-line front end: run a config or preset study, print closed-form
// predictions for a config, or run the verification checks.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "netform/config.hpp"
#include "netform/experiment.hpp"
#include "netform/io.hpp"
#include "netform/oracles.hpp"
#include "netform/presets.hpp"
#include "netform/verification.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// --out wins, then $NETFORM_OUT_DIR/<leaf>, then ./out/<leaf>.
fs::path resolve_out(const std::string& cli_out, const std::string& leaf) {
  if (!cli_out.empty()) return fs::path(cli_out);
  if (const char* env = std::getenv("NETFORM_OUT_DIR"); env && *env)
    return fs::path(env) / leaf;
  return fs::path("out") / leaf;
}

std::vector<std::uint32_t> quarter_checkpoints(std::uint32_t horizon) {
  std::vector<std::uint32_t> cps;
  for (std::uint32_t q = 1; q <= 4; ++q) {
    const std::uint32_t t = horizon / 4 * q;
    if (t >= 1 && (cps.empty() || cps.back() != t)) cps.push_back(t);
  }
  if (cps.empty() || cps.back() != horizon) cps.push_back(horizon);
  return cps;
}

void write_timing(const fs::path& dir, json timing) {
  netform::ensure_dir(dir);
  netform::write_file(dir / "timing.json", timing.dump(2) + "\n");
}

int cmd_simulate(const std::string& config_path, std::uint64_t seed, bool seed_set,
                 std::uint32_t reps, bool reps_set, unsigned parallel,
                 const std::string& out) {
  netform::SocietyConfig cfg = netform::load_config(config_path);
  if (seed_set) cfg.seed = seed;
  if (reps_set) cfg.replications = reps;

  netform::RunMetricsSpec spec;
  spec.checkpoints = quarter_checkpoints(cfg.horizon);
  spec.omega_series = true;

  const auto started = std::chrono::steady_clock::now();
  const netform::StudyResult result = netform::run_study(cfg, spec, parallel);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  const fs::path dir = resolve_out(out, fs::path(config_path).stem().string());
  netform::write_study_artifacts(result, dir);
  write_timing(dir, {{"command", "simulate"},
                     {"config", config_path},
                     {"parallelism", parallel},
                     {"seconds", secs}});
  std::cout << cfg.replications << " runs of " << cfg.horizon << " steps -> "
            << dir.string() << " (" << netform::format_double(secs) << "s)\n";
  return 0;
}

int cmd_preset(const std::string& name, double scale, unsigned parallel,
               const std::string& out) {
  const netform::Preset ps = netform::make_preset(name, scale);
  const fs::path dir = resolve_out(out, ps.name);

  json timing = {{"command", "preset " + name}, {"parallelism", parallel}};
  json per_variant = json::object();
  json labels = json::array();
  double total = 0.0;
  for (const netform::PresetVariant& v : ps.variants) {
    const auto started = std::chrono::steady_clock::now();
    const netform::StudyResult result = netform::run_study(v.config, ps.metrics, parallel);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    netform::write_study_artifacts(result, dir / v.label);
    per_variant[v.label] = secs;
    labels.push_back(v.label);
    total += secs;
    std::cout << ps.name << "/" << v.label << ": " << v.config.replications << " runs of "
              << v.config.horizon << " steps (" << netform::format_double(secs) << "s)"
              << std::endl;
  }
  netform::write_file(dir / "preset.json", json{{"name", ps.name},
                                                {"description", ps.description},
                                                {"backs", ps.backs},
                                                {"variants", labels}}
                                                   .dump(2) +
                                               "\n");
  timing["seconds"] = total;
  timing["variants"] = per_variant;
  write_timing(dir, timing);
  std::cout << "wrote " << dir.string() << std::endl;
  return 0;
}

int cmd_oracle(const std::string& config_path) {
  const netform::SocietyConfig cfg = netform::load_config(config_path);
  json out;
  out["config"] = json::parse(netform::config_to_json(cfg));
  out["derived"] = json::parse(netform::derived_quantities_json(netform::derive_quantities(cfg)));
  json preds = json::array();
  for (const netform::OraclePrediction& p : netform::all_predictions(cfg))
    preds.push_back({{"name", p.name},
                     {"kind", p.kind},
                     {"regime", p.regime},
                     {"in_regime", p.in_regime},
                     {"value", json::parse(p.value_json)}});
  out["predictions"] = preds;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& name, unsigned parallel) {
  std::vector<netform::CheckResult> results;
  if (name == "all") {
    for (const std::string& check : netform::verification_names()) {
      results.push_back(netform::run_verification(check, parallel));
      const netform::CheckResult& r = results.back();
      std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name << " ("
                << netform::format_double(r.seconds) << "s): " << r.detail << std::endl;
    }
  } else {
    results.push_back(netform::run_verification(name, parallel));
    const netform::CheckResult& r = results.back();
    std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name << " ("
              << netform::format_double(r.seconds) << "s): " << r.detail << std::endl;
  }
  for (const netform::CheckResult& r : results)
    if (!r.passed) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netform: social-network formation simulator and verification suite"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "netform 0.1.0");

  std::string config_path, out_dir, preset_name, verify_name;
  std::uint64_t seed = 0;
  std::uint32_t reps = 0;
  unsigned parallel = 0;
  double scale = 1.0;
  bool list_presets = false, list_checks = false;

  CLI::App* sim = app.add_subcommand("simulate", "run a study from a config file");
  sim->add_option("--config", config_path, "TOML or JSON society config")->required();
  CLI::Option* seed_opt = sim->add_option("--seed", seed, "override the config seed");
  CLI::Option* reps_opt = sim->add_option("--reps", reps, "override the replication count");
  sim->add_option("--parallel", parallel, "worker threads (0 = hardware)");
  sim->add_option("--out", out_dir, "output directory");

  CLI::App* pre = app.add_subcommand("preset", "run a named preset study");
  pre->add_option("name", preset_name, "preset name");
  pre->add_option("--scale", scale, "scale factor for horizon and replications");
  pre->add_option("--parallel", parallel, "worker threads (0 = hardware)");
  pre->add_option("--out", out_dir, "output directory");
  pre->add_flag("--list", list_presets, "list presets and exit");

  CLI::App* ora = app.add_subcommand("oracle", "print closed-form predictions for a config");
  ora->add_option("--config", config_path, "TOML or JSON society config")->required();

  CLI::App* ver = app.add_subcommand("verify", "run a verification check");
  ver->add_option("name", verify_name, "check name, or 'all'");
  ver->add_option("--parallel", parallel, "worker threads (0 = hardware)");
  ver->add_flag("--list", list_checks, "list checks and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // malformed invocation is a config error
  }

  try {
    if (*sim)
      return cmd_simulate(config_path, seed, seed_opt->count() > 0, reps,
                          reps_opt->count() > 0, parallel, out_dir);
    if (*pre) {
      if (list_presets) {
        for (const std::string& name : netform::preset_names())
          std::cout << name << ": " << netform::make_preset(name).description << "\n";
        return 0;
      }
      if (preset_name.empty()) {
        std::cerr << "preset: name required (or --list)\n";
        return 2;
      }
      return cmd_preset(preset_name, scale, parallel, out_dir);
    }
    if (*ora) return cmd_oracle(config_path);
    if (*ver) {
      if (list_checks) {
        for (const std::string& name : netform::verification_names())
          std::cout << name << "\n";
        return 0;
      }
      if (verify_name.empty()) {
        std::cerr << "verify: name required (or --list)\n";
        return 2;
      }
      return cmd_verify(verify_name, parallel);
    }
  } catch (const netform::ConfigError& e) {
    std::cerr << e.what() << "\n";  // what() already lists every issue
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
