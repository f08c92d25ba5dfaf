#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "parityproj/sweep.hpp"

namespace {

using parityproj::ConfigEntries;
using parityproj::format_g17;

struct ParamFlags {
  std::optional<double> p_abs, a1, a2, delta, eta, dark, p0, p2;
  bool distinguishable = false;
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags) {
  cmd->add_option("--p-abs", flags.p_abs,
                  "symmetric absorption probability (sets a1 and a2)");
  cmd->add_option("--a1", flags.a1, "arm-1 absorption probability");
  cmd->add_option("--a2", flags.a2, "arm-2 absorption probability");
  cmd->add_option("--delta", flags.delta, "interferometer path phase (rad)");
  cmd->add_option("--eta", flags.eta,
                  "detection efficiency; enables the detector pair");
  cmd->add_option("--dark", flags.dark, "dark-count rate (needs --eta)");
  cmd->add_option("--p0", flags.p0, "vacuum emission probability");
  cmd->add_option("--p2", flags.p2, "two-photon emission probability");
  cmd->add_flag("--distinguishable", flags.distinguishable,
                "two-photon component routes binomially instead of bunching");
}

ConfigEntries entries_from_flags(const ParamFlags& flags) {
  ConfigEntries entries;
  auto push = [&entries](const char* key, const std::optional<double>& value) {
    if (value.has_value()) entries.emplace_back(key, format_g17(*value));
  };
  push("p_abs", flags.p_abs);
  push("a1", flags.a1);
  push("a2", flags.a2);
  push("delta", flags.delta);
  push("eta", flags.eta);
  push("dark", flags.dark);
  push("p0", flags.p0);
  push("p2", flags.p2);
  if (flags.distinguishable) {
    entries.emplace_back("indistinguishable", "false");
  }
  return entries;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"density-operator simulator of absorption-heralded remote "
               "entanglement with two-round parity projection"};
  app.require_subcommand(1);

  ParamFlags resource_flags;
  CLI::App* resource_cmd =
      app.add_subcommand("resource", "report one prepared broker-pair resource");
  add_param_flags(resource_cmd, resource_flags);

  ParamFlags ppp_flags;
  CLI::App* ppp_cmd = app.add_subcommand(
      "ppp", "report the two-round protocol outcome for |++> clients");
  add_param_flags(ppp_cmd, ppp_flags);

  ParamFlags describe_flags;
  CLI::App* describe_cmd = app.add_subcommand(
      "describe", "report resource and protocol figures for one point");
  add_param_flags(describe_cmd, describe_flags);

  ParamFlags sweep_flags;
  std::string figure_token;
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> sweep_seed;
  std::optional<std::uint64_t> sweep_samples;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "emit a CSV parameter-sweep surface");
  sweep_cmd->add_option("--figure", figure_token, "2|3|4|custom");
  sweep_cmd->add_option("--config", config_path, "key = value config file");
  sweep_cmd->add_option("--out", out_path, "output CSV path");
  sweep_cmd->add_option("--seed", sweep_seed, "master seed");
  sweep_cmd->add_option("--samples", sweep_samples,
                        "Monte Carlo samples per grid point");
  add_param_flags(sweep_cmd, sweep_flags);

  std::uint64_t validate_seed = 1;
  bool inject_phase_sign_error = false;
  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "run the internal consistency audit");
  validate_cmd->add_option("--seed", validate_seed, "audit seed");
  validate_cmd
      ->add_flag("--inject-phase-sign-error", inject_phase_sign_error,
                 "flip one internal path-phase sign (mutation check)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (resource_cmd->parsed()) {
      std::cout << parityproj::resource_report(
          parityproj::point_params_from_entries(
              entries_from_flags(resource_flags)));
      return 0;
    }
    if (ppp_cmd->parsed()) {
      std::cout << parityproj::ppp_report(
          parityproj::point_params_from_entries(entries_from_flags(ppp_flags)));
      return 0;
    }
    if (describe_cmd->parsed()) {
      std::cout << parityproj::describe_report(
          parityproj::point_params_from_entries(
              entries_from_flags(describe_flags)));
      return 0;
    }
    if (sweep_cmd->parsed()) {
      ConfigEntries file_entries;
      if (!config_path.empty()) {
        file_entries = parityproj::parse_config_file(config_path);
      }
      std::string token = figure_token;
      if (token.empty()) {
        for (const auto& [key, value] : file_entries) {
          if (key == "figure") token = value;
        }
      }
      if (token.empty()) {
        throw parityproj::ConfigError(
            "figure is required (--figure or a figure = ... config line)");
      }
      ConfigEntries overrides = entries_from_flags(sweep_flags);
      if (sweep_seed.has_value()) {
        overrides.emplace_back("seed", std::to_string(*sweep_seed));
      }
      if (sweep_samples.has_value()) {
        overrides.emplace_back("samples", std::to_string(*sweep_samples));
      }
      if (!out_path.empty()) overrides.emplace_back("out", out_path);
      const parityproj::SweepConfig cfg = parityproj::make_sweep_config(
          parityproj::parse_figure(token), file_entries, overrides);
      parityproj::run_sweep(cfg);
      return 0;
    }
    if (validate_cmd->parsed()) {
      parityproj::ValidationOptions opts;
      opts.seed = validate_seed;
      opts.inject_phase_sign_error = inject_phase_sign_error;
      const parityproj::ValidationReport report =
          parityproj::run_validation(opts);
      std::cout << report.text;
      return report.passed ? 0 : 1;
    }
  } catch (const parityproj::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
