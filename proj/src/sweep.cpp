#include "parityproj/sweep.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "parityproj/rng.hpp"

namespace parityproj {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(begin, end - begin);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size() || !std::isfinite(v)) {
      throw std::invalid_argument(value);
    }
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected a number, got '" + value +
                      "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    if (!value.empty() && value[0] == '-') throw std::invalid_argument(value);
    const unsigned long long v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected a non-negative integer, got '" +
                      value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw ConfigError("key '" + key + "': expected true or false, got '" + value +
                    "'");
}

bool axis_name_known(const std::string& name) {
  return name == "p_abs" || name == "a1" || name == "a2" || name == "delta" ||
         name == "eta" || name == "dark" || name == "p0" || name == "p2";
}

void check_axis_domain(const Axis& axis) {
  if (axis.name == "delta") return;
  const double lo = std::min(axis.start, axis.stop);
  const double hi = std::max(axis.start, axis.stop);
  if (lo < 0.0 || hi > 1.0) {
    throw ConfigError("axis '" + axis.name + "' range outside [0, 1]");
  }
}

Axis parse_axis(const std::string& key, const std::string& value) {
  std::vector<std::string> parts;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(trim(item));
  if (parts.size() != 4) {
    throw ConfigError("key '" + key +
                      "': expected name,start,stop,steps, got '" + value + "'");
  }
  Axis axis;
  axis.name = parts[0];
  if (!axis_name_known(axis.name)) {
    throw ConfigError("key '" + key + "': unknown parameter '" + axis.name +
                      "'");
  }
  axis.start = parse_double(key, parts[1]);
  axis.stop = parse_double(key, parts[2]);
  const std::uint64_t steps = parse_u64(key, parts[3]);
  if (steps < 2 || steps > 100000) {
    throw ConfigError("key '" + key + "': steps must be in [2, 100000]");
  }
  axis.steps = static_cast<int>(steps);
  check_axis_domain(axis);
  return axis;
}

double axis_value(const Axis& axis, int k) {
  return axis.start + (axis.stop - axis.start) * k / (axis.steps - 1.0);
}

SweepConfig figure_defaults(FigureKind kind) {
  SweepConfig cfg;
  cfg.figure = kind;
  switch (kind) {
    case FigureKind::fig2:
      cfg.axis1 = Axis{"p_abs", 0.0, 1.0, 41};
      cfg.axis2 = Axis{"eta", 0.0, 1.0, 41};
      cfg.detectors = true;
      cfg.out = "fig2.csv";
      break;
    case FigureKind::fig3:
      cfg.axis1 = Axis{"p_abs", 0.0, 1.0, 41};
      cfg.axis2 = Axis{"dark", 0.0, 1.0, 41};
      cfg.detectors = true;
      cfg.eta = 1.0;
      cfg.out = "fig3.csv";
      break;
    case FigureKind::fig4:
      cfg.axis1 = Axis{"p0", 0.0, 0.5, 26};
      cfg.axis2 = Axis{"p2", 0.0, 0.05, 26};
      cfg.out = "fig4.csv";
      break;
    case FigureKind::custom:
      cfg.axis1 = Axis{};
      cfg.axis2 = Axis{};
      cfg.out = "sweep.csv";
      break;
  }
  return cfg;
}

void apply_entry(SweepConfig& cfg, const std::string& key,
                 const std::string& value) {
  if (key == "figure") {
    parse_figure(value);  // validated here, resolved by the caller
  } else if (key == "axis1") {
    cfg.axis1 = parse_axis(key, value);
  } else if (key == "axis2") {
    cfg.axis2 = parse_axis(key, value);
  } else if (key == "p_abs") {
    const double v = parse_double(key, value);
    cfg.a1 = v;
    cfg.a2 = v;
  } else if (key == "a1") {
    cfg.a1 = parse_double(key, value);
  } else if (key == "a2") {
    cfg.a2 = parse_double(key, value);
  } else if (key == "delta") {
    cfg.delta = parse_double(key, value);
  } else if (key == "eta") {
    cfg.eta = parse_double(key, value);
    cfg.detectors = true;
  } else if (key == "dark") {
    cfg.dark = parse_double(key, value);
  } else if (key == "p0") {
    cfg.p0 = parse_double(key, value);
  } else if (key == "p2") {
    cfg.p2 = parse_double(key, value);
  } else if (key == "indistinguishable") {
    cfg.indistinguishable = parse_bool(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_u64(key, value);
  } else if (key == "samples") {
    const std::uint64_t v = parse_u64(key, value);
    if (v == 0) throw ConfigError("key 'samples': must be at least 1");
    cfg.samples = v;
  } else if (key == "out") {
    if (value.empty()) throw ConfigError("key 'out': must not be empty");
    cfg.out = value;
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

void check_unit_interval(const std::string& name, double v) {
  if (v < 0.0 || v > 1.0) {
    throw ConfigError("key '" + name + "' outside [0, 1]");
  }
}

void validate_param_domains(const SweepConfig& cfg) {
  check_unit_interval("a1", cfg.a1);
  check_unit_interval("a2", cfg.a2);
  check_unit_interval("eta", cfg.eta);
  check_unit_interval("dark", cfg.dark);
  check_unit_interval("p0", cfg.p0);
  check_unit_interval("p2", cfg.p2);
}

void validate_config(SweepConfig& cfg) {
  if (cfg.axis1.steps == 0 || cfg.axis2.steps == 0) {
    throw ConfigError("custom sweeps need axis1 and axis2");
  }
  validate_param_domains(cfg);

  const bool sweeps_detector_param =
      cfg.axis1.name == "eta" || cfg.axis2.name == "eta";
  if (sweeps_detector_param) cfg.detectors = true;
  const bool uses_dark = cfg.dark > 0.0 || cfg.axis1.name == "dark" ||
                         cfg.axis2.name == "dark";
  if (uses_dark && !cfg.detectors) {
    throw ConfigError("sweeping or setting dark requires detectors (set eta)");
  }

  double max_p0 = cfg.p0;
  double max_p2 = cfg.p2;
  for (const Axis* axis : {&cfg.axis1, &cfg.axis2}) {
    const double hi = std::max(axis->start, axis->stop);
    if (axis->name == "p0") max_p0 = hi;
    if (axis->name == "p2") max_p2 = hi;
  }
  if (max_p0 + max_p2 > 1.0 + 1e-12) {
    throw ConfigError("p0 + p2 exceeds 1 somewhere on the grid");
  }
}

struct GridPoint {
  double v1 = 0.0;
  double v2 = 0.0;
  PointParams params;
};

void apply_axis_value(SweepConfig& scratch, const std::string& name,
                      double v) {
  if (name == "p_abs") {
    scratch.a1 = v;
    scratch.a2 = v;
  } else if (name == "a1") {
    scratch.a1 = v;
  } else if (name == "a2") {
    scratch.a2 = v;
  } else if (name == "delta") {
    scratch.delta = v;
  } else if (name == "eta") {
    scratch.eta = v;
  } else if (name == "dark") {
    scratch.dark = v;
  } else if (name == "p0") {
    scratch.p0 = v;
  } else if (name == "p2") {
    scratch.p2 = v;
  }
}

PointParams point_from(const SweepConfig& cfg) {
  PointParams p;
  p.node = NodeParams(cfg.a1, cfg.a2, cfg.delta);
  p.source = SourceModel(cfg.p0, 1.0 - cfg.p0 - cfg.p2, cfg.p2,
                         cfg.indistinguishable);
  p.det = cfg.detectors ? DetectorModel::with(cfg.eta, cfg.dark)
                        : DetectorModel::none();
  return p;
}

GridPoint grid_point(const SweepConfig& cfg, int i, int j) {
  GridPoint point;
  point.v1 = axis_value(cfg.axis1, i);
  point.v2 = axis_value(cfg.axis2, j);
  SweepConfig scratch = cfg;
  apply_axis_value(scratch, cfg.axis1.name, point.v1);
  apply_axis_value(scratch, cfg.axis2.name, point.v2);
  point.params = point_from(scratch);
  return point;
}

double simulated_success(const PointParams& p) {
  const ResourceOutcome resource = simulate_resource(p.node, p.source, p.det);
  return run_ppp(standard_clients(), resource, resource).p_success;
}

void emit_success_row(std::string& out, const GridPoint& point) {
  const double analytic =
      success_probability_analytic(point.params.node, point.params.det);
  const double simulated = simulated_success(point.params);
  out += format_g17(point.v1);
  out += ',';
  out += format_g17(point.v2);
  out += ',';
  out += format_g17(analytic);
  out += ',';
  out += format_g17(simulated);
  out += '\n';
}

void emit_trials_row(std::string& out, const GridPoint& point,
                     const SweepConfig& cfg, std::uint64_t point_index) {
  const double analytic = expected_trials_analytic(
      point.params.node, point.params.det, TrialUnit::accept);
  double mc_mean = std::numeric_limits<double>::quiet_NaN();
  double mc_stderr = std::numeric_limits<double>::quiet_NaN();
  if (std::isfinite(analytic)) {
    const TrialStats stats = expected_trials_mc(
        point.params.node, point.params.det, TrialUnit::accept, cfg.samples,
        fold_in(cfg.seed, point_index));
    mc_mean = stats.mc_mean;
    mc_stderr = stats.mc_stderr;
  }
  out += format_g17(point.v1);
  out += ',';
  out += format_g17(point.v2);
  out += ',';
  out += format_g17(analytic);
  out += ',';
  out += format_g17(mc_mean);
  out += ',';
  out += format_g17(mc_stderr);
  out += '\n';
}

void emit_figures_row(std::string& out, const GridPoint& point) {
  Figures figures{std::numeric_limits<double>::quiet_NaN(),
                  std::numeric_limits<double>::quiet_NaN()};
  try {
    figures = heralded_figures(point.params.node, point.params.source,
                               point.params.det);
  } catch (const std::domain_error&) {
    // nothing heralded at this grid point: emit the nan sentinels
  }
  out += format_g17(point.v1);
  out += ',';
  out += format_g17(point.v2);
  out += ',';
  out += format_g17(figures.concurrence);
  out += ',';
  out += format_g17(figures.fidelity);
  out += '\n';
}

std::string fmt_num(double v) {
  if (std::isnan(v)) return "none";
  if (std::isinf(v)) return "inf";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

void append_params(std::string& out, const PointParams& p) {
  out += "parameters\n";
  out += "  a1 " + fmt_num(p.node.a1) + " a2 " + fmt_num(p.node.a2) +
         " delta " + fmt_num(p.node.delta) + "\n";
  out += "  source p0 " + fmt_num(p.source.p0) + " p1 " + fmt_num(p.source.p1) +
         " p2 " + fmt_num(p.source.p2) + " indistinguishable " +
         (p.source.indistinguishable ? std::string("true")
                                     : std::string("false")) +
         "\n";
  if (p.det.present) {
    out += "  detectors eta " + fmt_num(p.det.eta) + " dark " +
           fmt_num(p.det.dark) + "\n";
  } else {
    out += "  detectors none\n";
  }
}

void append_matrix(std::string& out, const CMatrix& m) {
  char buffer[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += "   ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buffer, sizeof(buffer), " %+.9f%+.9fi", m(i, j).real(),
                    m(i, j).imag());
      out += buffer;
    }
    out += "\n";
  }
}

void append_resource_section(std::string& out, const PointParams& p) {
  const ResourceOutcome resource = simulate_resource(p.node, p.source, p.det);
  out += "resource\n";
  out += "  accept_prob " + fmt_num(resource.accept_prob) + "\n";
  out += "  bell_weight " + fmt_num(resource.bell_weight) + "\n";
  out += "  asymmetry_phi " + fmt_num(p.node.phi()) + "\n";
  const bool ideal_source = p.source.p0 == 0.0 && p.source.p2 == 0.0;
  if (ideal_source && !p.det.present) {
    const DensityOp closed = resource_closed_form(p.node);
    const double dev =
        (resource.state.matrix() - closed.matrix()).cwiseAbs().maxCoeff();
    out += "  closed_form_max_dev " + fmt_num(dev) + "\n";
  }
  out += "  state\n";
  append_matrix(out, resource.state.matrix());
}

void append_ppp_section(std::string& out, const PointParams& p) {
  const ResourceOutcome resource = simulate_resource(p.node, p.source, p.det);
  const PppResult result = run_ppp(standard_clients(), resource, resource);
  out += "ppp\n";
  out += "  p_success_analytic " +
         fmt_num(success_probability_analytic(p.node, p.det)) + "\n";
  out += "  p_success_simulated " + fmt_num(result.p_success) + "\n";
  out += "  p_failure " + fmt_num(result.p_failure) + "\n";
  out += "  expected_trials_per_accept " +
         fmt_num(expected_trials_analytic(p.node, p.det, TrialUnit::accept)) +
         "\n";
  out += "  expected_trials_per_ppp " +
         fmt_num(expected_trials_analytic(p.node, p.det, TrialUnit::ppp)) +
         "\n";
  out += "  heralded_branches\n";
  for (const auto& branch : result.branches) {
    out += "    m " + std::to_string(branch.m[0]) + std::to_string(branch.m[1]) +
           " n " + std::to_string(branch.n[0]) + std::to_string(branch.n[1]) +
           " parity " +
           (branch.parity == Parity::even ? std::string("even")
                                          : std::string("odd")) +
           " probability " + fmt_num(branch.probability);
    if (branch.state.has_value()) {
      out += " fidelity " + fmt_num(bell_fidelity(*branch.state, branch.parity));
      out += " concurrence " + fmt_num(concurrence(*branch.state));
    } else {
      out += " fidelity none concurrence none";
    }
    out += "\n";
  }
}

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

CheckResult check_closed_form() {
  CheckResult check{"closed_form_equivalence", 0.0, 1e-10, false};
  for (double a1 : {0.0, 0.05, 0.1, 0.5, 1.0}) {
    for (double a2 : {0.0, 0.05, 0.1, 0.5, 1.0}) {
      for (double delta : {0.0, 0.3, kPi / 2}) {
        const NodeParams node(a1, a2, delta);
        const ResourceOutcome sim =
            simulate_resource(node, SourceModel::ideal(), DetectorModel::none());
        const DensityOp closed = resource_closed_form(node);
        const double dev =
            (sim.state.matrix() - closed.matrix()).cwiseAbs().maxCoeff();
        check.deviation = std::max(check.deviation, dev);
      }
    }
  }
  check.passed = check.deviation <= check.tolerance;
  return check;
}

CheckResult check_success_probability() {
  CheckResult check{"success_probability", 0.0, 1e-9, false};
  const std::array<double, 5> etas{-1.0, 0.0, 0.5, 0.9, 1.0};  // -1: absent
  for (double a : {0.05, 0.1, 0.3, 0.5, 1.0}) {
    for (double eta : etas) {
      for (double delta : {0.0, 0.7}) {
        const NodeParams node(a, a, delta);
        const DetectorModel det =
            eta < 0.0 ? DetectorModel::none() : DetectorModel::with(eta);
        const ResourceOutcome resource =
            simulate_resource(node, SourceModel::ideal(), det);
        const PppResult result =
            run_ppp(standard_clients(), resource, resource);
        const double dev = std::abs(result.p_success -
                                    success_probability_analytic(node, det));
        check.deviation = std::max(check.deviation, dev);
      }
    }
  }
  check.passed = check.deviation <= check.tolerance;
  return check;
}

CheckResult check_dark_invariance() {
  CheckResult check{"dark_count_invariance", 0.0, 1e-12, false};
  const NodeParams node(0.1, 0.1, 0.3);
  const ResourceOutcome base =
      simulate_resource(node, SourceModel::ideal(), DetectorModel::with(0.7));
  for (double dark : {0.3, 0.9}) {
    const ResourceOutcome shifted = simulate_resource(
        node, SourceModel::ideal(), DetectorModel::with(0.7, dark));
    const double state_dev =
        (shifted.state.matrix() - base.state.matrix()).cwiseAbs().maxCoeff();
    const double scale_dev = std::abs(
        shifted.accept_prob - (1.0 - dark) * (1.0 - dark) * base.accept_prob);
    check.deviation = std::max({check.deviation, state_dev, scale_dev});
  }
  check.passed = check.deviation <= check.tolerance;
  return check;
}

CheckResult check_phase_invariance(bool inject_sign_error) {
  CheckResult check{"phase_invariance", 0.0, 1e-9, false};
  const double a = 0.3;
  const ResourceOutcome reference = simulate_resource(
      NodeParams(a, a, 0.0), SourceModel::ideal(), DetectorModel::none());
  const PppResult ref_result =
      run_ppp(standard_clients(), reference, reference);
  for (double delta : {0.4, kPi / 2, 2.5}) {
    const ResourceOutcome r1 = simulate_resource(
        NodeParams(a, a, delta), SourceModel::ideal(), DetectorModel::none());
    const double second_delta = inject_sign_error ? -delta : delta;
    const ResourceOutcome r2 =
        simulate_resource(NodeParams(a, a, second_delta), SourceModel::ideal(),
                          DetectorModel::none());
    const PppResult result = run_ppp(standard_clients(), r1, r2);
    for (std::size_t b = 0; b < result.branches.size(); ++b) {
      const auto& branch = result.branches[b];
      const auto& ref_branch = ref_result.branches[b];
      if (!branch.state.has_value() || !ref_branch.state.has_value()) continue;
      const double dev = (branch.state->matrix() - ref_branch.state->matrix())
                             .cwiseAbs()
                             .maxCoeff();
      check.deviation = std::max(check.deviation, dev);
    }
  }
  check.passed = check.deviation <= check.tolerance;
  return check;
}

CheckResult check_failure_separability() {
  CheckResult check{"failure_separability", 0.0, 1e-10, false};
  for (double a : {0.1, 0.5, 1.0}) {
    for (double delta : {0.0, 0.7}) {
      const ResourceOutcome resource = simulate_resource(
          NodeParams(a, a, delta), SourceModel::ideal(), DetectorModel::none());
      const PppResult result = run_ppp(standard_clients(), resource, resource);
      for (const auto& branch : result.failure_branches) {
        if (!branch.state.has_value()) continue;
        check.deviation = std::max(check.deviation, concurrence(*branch.state));
      }
    }
  }
  check.passed = check.deviation <= check.tolerance;
  return check;
}

CheckResult check_mc_agreement(std::uint64_t seed) {
  CheckResult check{"mc_agreement", 0.0, 3.0, false};
  const NodeParams node(0.1, 0.1, 0.0);
  const DetectorModel det = DetectorModel::with(1.0, 0.5);
  const TrialStats stats =
      expected_trials_mc(node, det, TrialUnit::accept, 100000, seed);
  check.deviation =
      std::abs(stats.mc_mean - stats.expected_per_accept) / stats.mc_stderr;
  check.passed = check.deviation <= check.tolerance;
  return check;
}

}  // namespace

std::string figure_name(FigureKind kind) {
  switch (kind) {
    case FigureKind::fig2:
      return "fig2";
    case FigureKind::fig3:
      return "fig3";
    case FigureKind::fig4:
      return "fig4";
    case FigureKind::custom:
      return "custom";
  }
  return "custom";
}

FigureKind parse_figure(const std::string& token) {
  if (token == "2" || token == "fig2") return FigureKind::fig2;
  if (token == "3" || token == "fig3") return FigureKind::fig3;
  if (token == "4" || token == "fig4") return FigureKind::fig4;
  if (token == "custom") return FigureKind::custom;
  throw ConfigError("unknown figure '" + token + "'");
}

ConfigEntries parse_config_text(const std::string& text) {
  ConfigEntries entries;
  std::stringstream ss(text);
  std::string line;
  int line_number = 0;
  while (std::getline(ss, line)) {
    ++line_number;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_number) +
                        ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_number) + ": empty key");
    }
    entries.emplace_back(key, value);
  }
  return entries;
}

ConfigEntries parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

SweepConfig make_sweep_config(FigureKind figure, const ConfigEntries& file,
                              const ConfigEntries& overrides) {
  SweepConfig cfg = figure_defaults(figure);
  for (const auto& [key, value] : file) apply_entry(cfg, key, value);
  for (const auto& [key, value] : overrides) apply_entry(cfg, key, value);
  cfg.figure = figure;
  validate_config(cfg);
  return cfg;
}

std::string format_g17(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::string run_sweep_to_string(const SweepConfig& cfg) {
  std::string out;
  switch (cfg.figure) {
    case FigureKind::fig3:
      out = cfg.axis1.name + "," + cfg.axis2.name +
            ",trials_analytic,trials_mc,mc_stderr\n";
      break;
    case FigureKind::fig4:
      out = cfg.axis1.name + "," + cfg.axis2.name + ",concurrence,fidelity\n";
      break;
    default:
      out = cfg.axis1.name + "," + cfg.axis2.name +
            ",p_success_analytic,p_success_simulated\n";
      break;
  }
  for (int i = 0; i < cfg.axis1.steps; ++i) {
    for (int j = 0; j < cfg.axis2.steps; ++j) {
      const GridPoint point = grid_point(cfg, i, j);
      const std::uint64_t index =
          static_cast<std::uint64_t>(i) * cfg.axis2.steps + j;
      switch (cfg.figure) {
        case FigureKind::fig3:
          emit_trials_row(out, point, cfg, index);
          break;
        case FigureKind::fig4:
          emit_figures_row(out, point);
          break;
        default:
          emit_success_row(out, point);
          break;
      }
    }
  }
  return out;
}

void run_sweep(const SweepConfig& cfg) {
  const std::string csv = run_sweep_to_string(cfg);
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file '" + cfg.out + "'");
  out << csv;
  if (!out) throw ConfigError("failed writing output file '" + cfg.out + "'");
}

ValidationReport run_validation(const ValidationOptions& opts) {
  std::vector<CheckResult> checks;
  checks.push_back(check_closed_form());
  checks.push_back(check_success_probability());
  checks.push_back(check_dark_invariance());
  checks.push_back(check_phase_invariance(opts.inject_phase_sign_error));
  checks.push_back(check_failure_separability());
  checks.push_back(check_mc_agreement(opts.seed));

  ValidationReport report;
  report.passed = true;
  report.text = "validation seed " + std::to_string(opts.seed) +
                " generator " + kGeneratorId + "\n";
  int passed_count = 0;
  char buffer[160];
  for (const auto& check : checks) {
    std::snprintf(buffer, sizeof(buffer),
                  "check %-24s deviation %.3e tolerance %.0e %s\n",
                  check.name.c_str(), check.deviation, check.tolerance,
                  check.passed ? "PASS" : "FAIL");
    report.text += buffer;
    report.passed = report.passed && check.passed;
    passed_count += check.passed ? 1 : 0;
  }
  std::snprintf(buffer, sizeof(buffer), "result %s checks %d/%d\n",
                report.passed ? "PASS" : "FAIL", passed_count,
                static_cast<int>(checks.size()));
  report.text += buffer;
  return report;
}

PointParams point_params_from_entries(const ConfigEntries& entries) {
  SweepConfig cfg = figure_defaults(FigureKind::custom);
  for (const auto& [key, value] : entries) {
    if (key == "figure" || key == "axis1" || key == "axis2" || key == "out" ||
        key == "seed" || key == "samples") {
      throw ConfigError("key '" + key + "' is not a point parameter");
    }
    apply_entry(cfg, key, value);
  }
  validate_param_domains(cfg);
  if (cfg.dark > 0.0 && !cfg.detectors) {
    throw ConfigError("setting dark requires detectors (set eta)");
  }
  if (cfg.p0 + cfg.p2 > 1.0 + 1e-12) {
    throw ConfigError("p0 + p2 exceeds 1");
  }
  return point_from(cfg);
}

std::string resource_report(const PointParams& p) {
  std::string out;
  append_params(out, p);
  append_resource_section(out, p);
  return out;
}

std::string ppp_report(const PointParams& p) {
  std::string out;
  append_params(out, p);
  append_ppp_section(out, p);
  return out;
}

std::string describe_report(const PointParams& p) {
  std::string out;
  append_params(out, p);
  append_resource_section(out, p);
  append_ppp_section(out, p);
  return out;
}

}  // namespace parityproj
