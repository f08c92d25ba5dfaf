#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parityproj/densop.hpp"
#include "parityproj/metrics.hpp"
#include "parityproj/photonics.hpp"
#include "parityproj/ppp.hpp"
#include "parityproj/rng.hpp"
#include "parityproj/sweep.hpp"

namespace py = pybind11;
using namespace parityproj;

namespace {

py::tuple outcome_tuple(const Outcome& m) { return py::make_tuple(m[0], m[1]); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Density-operator simulator of absorption-heralded remote entanglement "
      "with a two-round parity projection protocol";
  m.attr("__version__") = "1.0.0";
  m.attr("GENERATOR_ID") = kGeneratorId;

  py::register_exception<ConfigError>(m, "ConfigError");

  py::class_<PureState>(m, "PureState")
      .def(py::init<CVector>(), py::arg("amplitudes"))
      .def_static("basis", &PureState::basis, py::arg("dim"), py::arg("k"))
      .def_property_readonly("dim", &PureState::dim)
      .def_property_readonly("amplitudes", &PureState::amplitudes);

  py::class_<DensityOp>(m, "DensityOp")
      .def(py::init<CMatrix, bool>(), py::arg("matrix"),
           py::arg("normalized") = true)
      .def_static("from_pure", &DensityOp::from_pure, py::arg("psi"))
      .def_static("basis_state", &DensityOp::basis_state, py::arg("dim"),
                  py::arg("k"))
      .def_static("maximally_mixed", &DensityOp::maximally_mixed,
                  py::arg("dim"))
      .def_property_readonly("dim", &DensityOp::dim)
      .def_property_readonly("matrix", &DensityOp::matrix)
      .def_property_readonly("is_normalized", &DensityOp::is_normalized)
      .def("trace", &DensityOp::trace)
      .def("normalized", &DensityOp::normalized)
      .def("spectrum", &DensityOp::spectrum)
      .def("check_invariants", &DensityOp::check_invariants);

  py::class_<KrausSet>(m, "KrausSet")
      .def(py::init<std::vector<CMatrix>, std::string, bool>(), py::arg("ops"),
           py::arg("label"), py::arg("trace_preserving"))
      .def_static("unitary", &KrausSet::unitary, py::arg("u"), py::arg("label"))
      .def_static("single", &KrausSet::single, py::arg("k"), py::arg("label"))
      .def_static("projector", &KrausSet::projector, py::arg("p"),
                  py::arg("label"))
      .def_property_readonly("ops", &KrausSet::ops)
      .def_property_readonly("label", &KrausSet::label)
      .def_property_readonly("trace_preserving", &KrausSet::trace_preserving);

  m.def(
      "tensor",
      [](const DensityOp& a, const DensityOp& b) { return tensor(a, b); },
      py::arg("a"), py::arg("b"));
  m.def("partial_trace", &partial_trace, py::arg("rho"), py::arg("dims"),
        py::arg("keep"));
  m.def("apply_kraus", &apply_kraus, py::arg("rho"), py::arg("channel"));
  m.def(
      "measure",
      [](const DensityOp& rho, const std::vector<KrausSet>& outcomes) {
        py::list result;
        for (const auto& branch : measure(rho, outcomes)) {
          result.append(py::make_tuple(
              branch.probability,
              branch.state.has_value() ? py::cast(*branch.state)
                                       : py::object(py::none())));
        }
        return result;
      },
      py::arg("rho"), py::arg("outcomes"));

  py::class_<NodeParams>(m, "NodeParams")
      .def(py::init<double, double, double>(), py::arg("a1"), py::arg("a2"),
           py::arg("delta") = 0.0)
      .def_readonly("a1", &NodeParams::a1)
      .def_readonly("a2", &NodeParams::a2)
      .def_readonly("delta", &NodeParams::delta)
      .def("bell_weight", &NodeParams::bell_weight)
      .def("phi", &NodeParams::phi);

  py::class_<DetectorModel>(m, "DetectorModel")
      .def_static("none", &DetectorModel::none)
      .def_static("with_", &DetectorModel::with, py::arg("eta"),
                  py::arg("dark") = 0.0)
      .def_readonly("present", &DetectorModel::present)
      .def_readonly("eta", &DetectorModel::eta)
      .def_readonly("dark", &DetectorModel::dark);

  py::class_<SourceModel>(m, "SourceModel")
      .def(py::init<double, double, double, bool>(), py::arg("p0"),
           py::arg("p1"), py::arg("p2"), py::arg("indistinguishable") = true)
      .def_static("ideal", &SourceModel::ideal)
      .def_readonly("p0", &SourceModel::p0)
      .def_readonly("p1", &SourceModel::p1)
      .def_readonly("p2", &SourceModel::p2)
      .def_readonly("indistinguishable", &SourceModel::indistinguishable);

  py::class_<ResourceOutcome>(m, "ResourceOutcome")
      .def_readonly("accept_prob", &ResourceOutcome::accept_prob)
      .def_readonly("state", &ResourceOutcome::state)
      .def_readonly("bell_weight", &ResourceOutcome::bell_weight);

  m.def("asymmetry_phase_op", &asymmetry_phase_op, py::arg("phi"),
        py::arg("delta"));
  m.def("resource_closed_form", &resource_closed_form, py::arg("node"));
  m.def("noclick_kraus", &noclick_kraus, py::arg("det"));
  m.def("simulate_resource", &simulate_resource, py::arg("node"),
        py::arg("source"), py::arg("det"));
  m.def("absorption_unitary", &absorption_unitary, py::arg("a"));
  m.def("acceptance_probability", &acceptance_probability, py::arg("node"),
        py::arg("det"));
  m.def("conditioned_bell_weight", &conditioned_bell_weight, py::arg("node"),
        py::arg("det"));

  py::enum_<Parity>(m, "Parity")
      .value("even", Parity::even)
      .value("odd", Parity::odd);

  m.def(
      "parity_label",
      [](int m1, int m2) { return parity_label(Outcome{m1, m2}); },
      py::arg("m1"), py::arg("m2"));
  m.def(
      "herald_accepts",
      [](int m1, int m2, int n1, int n2) {
        return herald_accepts(Outcome{m1, m2}, Outcome{n1, n2});
      },
      py::arg("m1"), py::arg("m2"), py::arg("n1"), py::arg("n2"));
  m.def("parity_projector", &parity_projector, py::arg("parity"));
  m.def("standard_clients", &standard_clients);

  m.def(
      "run_round",
      [](const DensityOp& clients, const ResourceOutcome& resource) {
        py::list result;
        for (const auto& branch : run_round(clients, resource)) {
          result.append(py::make_tuple(outcome_tuple(branch.m), branch.state));
        }
        return result;
      },
      py::arg("clients"), py::arg("resource"));

  py::class_<PppBranch>(m, "PppBranch")
      .def_property_readonly("m",
                             [](const PppBranch& b) { return outcome_tuple(b.m); })
      .def_property_readonly("n",
                             [](const PppBranch& b) { return outcome_tuple(b.n); })
      .def_readonly("heralded", &PppBranch::heralded)
      .def_readonly("parity", &PppBranch::parity)
      .def_readonly("probability", &PppBranch::probability)
      .def_property_readonly("state", [](const PppBranch& b) {
        return b.state.has_value() ? py::cast(*b.state)
                                   : py::object(py::none());
      });

  py::class_<PppResult>(m, "PppResult")
      .def_readonly("p_success", &PppResult::p_success)
      .def_readonly("p_failure", &PppResult::p_failure)
      .def_readonly("branches", &PppResult::branches)
      .def_readonly("failure_branches", &PppResult::failure_branches);

  m.def("run_ppp", &run_ppp, py::arg("clients"), py::arg("r1"), py::arg("r2"));
  m.def("success_probability_analytic", &success_probability_analytic,
        py::arg("node"), py::arg("det"));

  py::enum_<TrialUnit>(m, "TrialUnit")
      .value("accept", TrialUnit::accept)
      .value("ppp", TrialUnit::ppp);

  py::class_<TrialStats>(m, "TrialStats")
      .def_readonly("expected_per_accept", &TrialStats::expected_per_accept)
      .def_readonly("expected_per_ppp", &TrialStats::expected_per_ppp)
      .def_readonly("mc_mean", &TrialStats::mc_mean)
      .def_readonly("mc_stderr", &TrialStats::mc_stderr)
      .def_readonly("samples", &TrialStats::samples)
      .def_readonly("seed", &TrialStats::seed)
      .def_readonly("generator", &TrialStats::generator);

  py::class_<Figures>(m, "Figures")
      .def_readonly("fidelity", &Figures::fidelity)
      .def_readonly("concurrence", &Figures::concurrence);

  m.def("concurrence", &concurrence, py::arg("rho"));
  m.def("bell_fidelity", &bell_fidelity, py::arg("rho"), py::arg("parity"));
  m.def("expected_trials_analytic", &expected_trials_analytic, py::arg("node"),
        py::arg("det"), py::arg("unit"));
  m.def("expected_trials_mc", &expected_trials_mc, py::arg("node"),
        py::arg("det"), py::arg("unit"), py::arg("samples"), py::arg("seed"));
  m.def(
      "heralded_figures",
      [](const NodeParams& node, const SourceModel& source,
         const DetectorModel& det) {
        return heralded_figures(node, source, det);
      },
      py::arg("node"), py::arg("source"), py::arg("det"));
  m.def(
      "source_fault_analysis",
      [](const NodeParams& node, const SourceModel& source) {
        return source_fault_analysis(node, source);
      },
      py::arg("node"), py::arg("source"));

  m.def(
      "sweep_csv",
      [](const std::string& figure, const ConfigEntries& entries) {
        return run_sweep_to_string(
            make_sweep_config(parse_figure(figure), entries, ConfigEntries{}));
      },
      py::arg("figure"), py::arg("entries") = ConfigEntries{});
  m.def(
      "validation_report",
      [](std::uint64_t seed) {
        ValidationOptions opts;
        opts.seed = seed;
        const ValidationReport report = run_validation(opts);
        return py::make_tuple(report.passed, report.text);
      },
      py::arg("seed") = 1);
  m.def(
      "describe_text",
      [](const ConfigEntries& entries) {
        return describe_report(point_params_from_entries(entries));
      },
      py::arg("entries") = ConfigEntries{});
}
