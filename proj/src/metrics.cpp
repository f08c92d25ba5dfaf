#include "parityproj/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "parityproj/rng.hpp"

namespace parityproj {

namespace {

const CMatrix& spin_flip_pair() {
  static const CMatrix yy = [] {
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 3) = -1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 0) = -1.0;
    return m;
  }();
  return yy;
}

PureState bell_state(Parity parity) {
  CVector v = CVector::Zero(4);
  const double r = 1.0 / std::sqrt(2.0);
  if (parity == Parity::even) {
    v(0) = r;
    v(3) = r;
  } else {
    v(1) = r;
    v(2) = r;
  }
  return PureState(std::move(v));
}

double sample_trials(SplitMix64& rng, double q, double p_cond,
                     TrialUnit unit) {
  if (unit == TrialUnit::accept) {
    return static_cast<double>(draw_geometric(rng, q));
  }
  double total = 0.0;
  while (true) {
    total += static_cast<double>(draw_geometric(rng, q));
    total += static_cast<double>(draw_geometric(rng, q));
    if (rng.uniform01() < p_cond) return total;
  }
}

}  // namespace

double concurrence(const DensityOp& rho) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("concurrence is defined for two qubits");
  }
  const CMatrix& yy = spin_flip_pair();
  const CMatrix flipped = yy * rho.matrix().conjugate() * yy;
  Eigen::ComplexEigenSolver<CMatrix> solver(rho.matrix() * flipped, false);
  std::array<double, 4> roots{};
  for (int i = 0; i < 4; ++i) {
    roots[i] = std::sqrt(std::max(0.0, solver.eigenvalues()(i).real()));
  }
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

double bell_fidelity(const DensityOp& rho, Parity parity) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("Bell fidelity is defined for two qubits");
  }
  const CVector& target = bell_state(parity).amplitudes();
  const Complex overlap = (target.adjoint() * rho.matrix() * target)(0, 0);
  return overlap.real();
}

double expected_trials_analytic(const NodeParams& node,
                                const DetectorModel& det, TrialUnit unit) {
  const double q = acceptance_probability(node, det);
  if (q < kDivergenceCutoff) return std::numeric_limits<double>::infinity();
  if (unit == TrialUnit::accept) return 1.0 / q;
  const double p_cond = success_probability_analytic(node, det);
  if (p_cond < kDivergenceCutoff) {
    return std::numeric_limits<double>::infinity();
  }
  return 2.0 / (q * p_cond);
}

TrialStats expected_trials_mc(const NodeParams& node, const DetectorModel& det,
                              TrialUnit unit, std::uint64_t samples,
                              std::uint64_t seed) {
  if (samples == 0) {
    throw std::invalid_argument("Monte Carlo needs at least one sample");
  }
  TrialStats stats;
  stats.expected_per_accept =
      expected_trials_analytic(node, det, TrialUnit::accept);
  stats.expected_per_ppp = expected_trials_analytic(node, det, TrialUnit::ppp);
  stats.samples = samples;
  stats.seed = seed;
  stats.generator = kGeneratorId;

  const double analytic = unit == TrialUnit::accept ? stats.expected_per_accept
                                                    : stats.expected_per_ppp;
  if (std::isinf(analytic)) {
    throw std::domain_error("expected trial count diverges for these parameters");
  }

  const double q = acceptance_probability(node, det);
  const double p_cond = success_probability_analytic(node, det);

  long double sum = 0.0L;
  long double sum_sq = 0.0L;
  for (std::uint64_t i = 0; i < samples; ++i) {
    SplitMix64 rng = substream(seed, i);
    const double x = sample_trials(rng, q, p_cond, unit);
    sum += x;
    sum_sq += static_cast<long double>(x) * x;
  }
  const long double n = static_cast<long double>(samples);
  const long double mean = sum / n;
  stats.mc_mean = static_cast<double>(mean);
  if (samples > 1) {
    long double var = (sum_sq - n * mean * mean) / (n - 1.0L);
    if (var < 0.0L) var = 0.0L;
    stats.mc_stderr = static_cast<double>(std::sqrt(var / n));
  }
  return stats;
}

Figures heralded_figures(const NodeParams& node, const SourceModel& source,
                         const DetectorModel& det, const DensityOp& clients) {
  const ResourceOutcome resource = simulate_resource(node, source, det);
  const PppResult result = run_ppp(clients, resource, resource);

  double total_weight = 0.0;
  double fidelity_sum = 0.0;
  double concurrence_sum = 0.0;
  for (Parity parity : {Parity::even, Parity::odd}) {
    double weight = 0.0;
    CMatrix mixed = CMatrix::Zero(4, 4);
    for (const auto& branch : result.branches) {
      if (branch.parity != parity || !branch.state.has_value()) continue;
      weight += branch.probability;
      mixed += branch.probability * branch.state->matrix();
    }
    if (weight < tol::kBranchCutoff) continue;
    const DensityOp state(mixed / weight, true);
    total_weight += weight;
    fidelity_sum += weight * bell_fidelity(state, parity);
    concurrence_sum += weight * concurrence(state);
  }
  if (total_weight < tol::kBranchCutoff) {
    throw std::domain_error("nothing is heralded at these parameters");
  }
  return Figures{fidelity_sum / total_weight, concurrence_sum / total_weight};
}

Figures heralded_figures(const NodeParams& node, const SourceModel& source,
                         const DetectorModel& det) {
  return heralded_figures(node, source, det, standard_clients());
}

Figures source_fault_analysis(const NodeParams& node, const SourceModel& source,
                              const DensityOp& clients) {
  return heralded_figures(node, source, DetectorModel::none(), clients);
}

Figures source_fault_analysis(const NodeParams& node,
                              const SourceModel& source) {
  return heralded_figures(node, source, DetectorModel::none());
}

}  // namespace parityproj
