// Command-line experiment runner: evaluates the BER/optimal-k sweeps as
// machine-readable tables and runs the oracle validation suite.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "kga/experiment.hpp"
#include "kga/validation.hpp"

namespace {

struct CommonOptions {
  std::string out_path;
  std::string format = "csv";
  std::uint64_t seed = 1;
  std::map<std::string, std::string> params;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--out", opts.out_path, "Output path (default: stdout)");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", opts.seed, "Random seed");
  // Frequently swept parameters get first-class flags; anything else can
  // be passed through --param key=value.
  for (const char* key :
       {"kbar", "alpha", "m", "snr-db", "ber-target", "estimator", "d"}) {
    std::string name = key;
    std::string param = name;
    for (auto& c : param)
      if (c == '-') c = '_';
    cmd->add_option_function<std::string>(
        "--" + name,
        [&opts, param](const std::string& value) { opts.params[param] = value; },
        "Override preset parameter '" + param + "'");
  }
  cmd->add_option_function<std::vector<std::string>>(
      "--param",
      [&opts](const std::vector<std::string>& kvs) {
        for (const auto& kv : kvs) {
          const auto eq = kv.find('=');
          if (eq == std::string::npos)
            throw CLI::ValidationError("--param expects key=value, got '" +
                                       kv + "'");
          opts.params[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
      },
      "Extra key=value parameter overrides");
}

int emit(const kga::ExperimentSpec& spec) {
  const kga::ResultTable table = kga::run_experiment(spec);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!spec.out_path.empty()) {
    file.open(spec.out_path);
    if (!file) {
      std::cerr << "error: cannot open output file " << spec.out_path << '\n';
      return 1;
    }
    out = &file;
  }
  if (spec.format == kga::OutputFormat::Csv)
    kga::write_csv(table, *out);
  else
    kga::write_json(table, *out);
  return 0;
}

int run_preset(kga::Preset preset, const std::string& name,
               const CommonOptions& opts) {
  kga::ExperimentSpec spec;
  spec.name = name;
  spec.preset = preset;
  spec.params = opts.params;
  spec.out_path = opts.out_path;
  spec.seed = opts.seed;
  spec.format = opts.format == "json" ? kga::OutputFormat::Json
                                      : kga::OutputFormat::Csv;
  try {
    return emit(spec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "BER and energy analysis of best-of-k uplink scheduling with a "
      "scheduling/data energy split"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read defaults from a key=value file");

  struct Sub {
    const char* name;
    const char* help;
    kga::Preset preset;
  };
  const Sub subs[] = {
      {"ber-curve", "Exact/upper-bound/approximate BER versus SNR",
       kga::Preset::BerCurves},
      {"eta", "Log-BER derivative across the candidate user counts",
       kga::Preset::EtaCurve},
      {"optimize-k", "Optimal active-user count versus total average power",
       kga::Preset::OptKvsPt},
      {"sweep-pt", "Optimal-k and all-active BER versus total average power",
       kga::Preset::BerVsPt},
      {"dt-ds", "Delay-tolerant/delay-sensitive averages over shadowing",
       kga::Preset::DtDsSweep},
      {"multi-antenna", "Optimal k and BER versus diversity order",
       kga::Preset::MultiAntenna},
  };

  std::map<std::string, CommonOptions> options;
  std::map<std::string, const Sub*> by_name;
  for (const auto& sub : subs) {
    auto* cmd = app.add_subcommand(sub.name, sub.help);
    add_common(cmd, options[sub.name]);
    cmd->add_option_function<std::string>(
        "--preset",
        [&options, name = std::string(sub.name)](const std::string& v) {
          options[name].params["preset_variant"] = v;
        },
        "Named parameter variant (e.g. sweep axis)");
    by_name[sub.name] = &sub;
  }

  auto* validate = app.add_subcommand(
      "validate", "Run the cross-module oracle suite");
  std::string level = "fast";
  std::uint64_t validate_seed = 1;
  validate->add_option("--level", level, "fast (~CI) or full")
      ->check(CLI::IsMember({"fast", "full"}));
  validate->add_option("--seed", validate_seed, "Random seed");

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) {
    const auto results = kga::run_validation(
        level == "full" ? kga::ValidationLevel::Full
                        : kga::ValidationLevel::Fast,
        validate_seed);
    kga::print_report(results, std::cout);
    int failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    if (failed) std::cout << failed << " check(s) failed\n";
    return failed == 0 ? 0 : 1;
  }

  for (const auto& sub : subs) {
    auto* cmd = app.get_subcommand(sub.name);
    if (cmd->parsed()) {
      auto& opts = options[sub.name];
      // The sweep axis variant doubles as a convenience preset switch.
      auto variant = opts.params.find("preset_variant");
      if (variant != opts.params.end()) {
        if (variant->second == "fig3" || variant->second == "fig4")
          opts.params["sweep"] = "kbar";
        else if (variant->second == "fig5" || variant->second == "fig6")
          opts.params["sweep"] = "snr";
        else
          opts.params["sweep"] = variant->second;
        opts.params.erase("preset_variant");
      }
      return run_preset(sub.preset, sub.name, opts);
    }
  }
  return 0;
}
