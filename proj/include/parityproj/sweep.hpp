#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parityproj/metrics.hpp"
#include "parityproj/photonics.hpp"

namespace parityproj {

// Configuration / parameter errors; the CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FigureKind { fig2, fig3, fig4, custom };

std::string figure_name(FigureKind kind);
FigureKind parse_figure(const std::string& token);  // accepts "2" or "fig2" etc.

// One swept parameter: `steps` evenly spaced values over [start, stop].
// Names come from the config vocabulary (p_abs, a1, a2, delta, eta, dark,
// p0, p2).
struct Axis {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
};

struct SweepConfig {
  FigureKind figure = FigureKind::custom;
  Axis axis1;
  Axis axis2;
  double a1 = 0.1;
  double a2 = 0.1;
  double delta = 0.0;
  bool detectors = false;
  double eta = 1.0;
  double dark = 0.0;
  double p0 = 0.0;
  double p2 = 0.0;
  bool indistinguishable = true;
  std::uint64_t seed = 1;
  std::uint64_t samples = 2000;
  std::string out;
};

// Ordered key = value assignments; later assignments win.
using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

// Parses the flat key = value grammar ('#' comments, blank lines allowed).
// Unknown keys or malformed lines raise ConfigError.
ConfigEntries parse_config_text(const std::string& text);
ConfigEntries parse_config_file(const std::string& path);

// Figure defaults, then file entries, then overrides (command line wins).
SweepConfig make_sweep_config(FigureKind figure, const ConfigEntries& file,
                              const ConfigEntries& overrides);

// CSV surface for the configured figure, one row per grid point in row-major
// axis1-outer order. Numeric cells carry 17 significant digits; divergent
// trial expectations are emitted as inf/nan sentinels. Byte-deterministic for
// a fixed config and seed.
std::string run_sweep_to_string(const SweepConfig& cfg);

// Writes run_sweep_to_string to cfg.out (binary mode, LF endings).
void run_sweep(const SweepConfig& cfg);

struct ValidationOptions {
  std::uint64_t seed = 1;
  // Test hook: flips the sign of the path phase on one internal round so the
  // phase-invariance check must fail; exercises mutation sensitivity.
  bool inject_phase_sign_error = false;
};

struct ValidationReport {
  bool passed = false;
  std::string text;  // byte-deterministic for a fixed seed
};

// Internal consistency audit: closed-form equivalence, analytic success
// probability, dark-count invariance, path-phase invariance, failure-branch
// separability, Monte Carlo agreement.
ValidationReport run_validation(const ValidationOptions& opts);

struct PointParams {
  NodeParams node{0.1, 0.1, 0.0};
  SourceModel source = SourceModel::ideal();
  DetectorModel det = DetectorModel::none();
};

// Builds single-point parameters from point-level config entries (p_abs, a1,
// a2, delta, eta, dark, p0, p2, indistinguishable); sweep-level keys are
// rejected. Setting eta enables the detector pair.
PointParams point_params_from_entries(const ConfigEntries& entries);

// Text reports behind the resource / ppp / describe subcommands.
std::string resource_report(const PointParams& p);
std::string ppp_report(const PointParams& p);
std::string describe_report(const PointParams& p);

// 17-significant-digit decimal form used by the CSV dialect.
std::string format_g17(double v);

}  // namespace parityproj
