#include "parityproj/photonics.hpp"

#include <cmath>
#include <stdexcept>

namespace parityproj {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Pipeline layout: subsystems [atom1, atom2, arm1, arm2], each of dimension 3.
// Atom levels: 0 ground, 1 storage, 2 excited. Arm levels: photon number 0..2.
const std::vector<Eigen::Index> kPipelineDims{3, 3, 3, 3};
constexpr Eigen::Index kPipelineDim = 81;

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::array<Eigen::Index, 4> split_index(Eigen::Index i) {
  return {i / 27, (i / 9) % 3, (i / 3) % 3, i % 3};
}

// Lifts a single-subsystem operator to the full pipeline space.
CMatrix embed_one(const CMatrix& op, int site) {
  CMatrix out = CMatrix::Zero(kPipelineDim, kPipelineDim);
  for (Eigen::Index i = 0; i < kPipelineDim; ++i) {
    const auto di = split_index(i);
    for (Eigen::Index j = 0; j < kPipelineDim; ++j) {
      const auto dj = split_index(j);
      bool rest_equal = true;
      for (int s = 0; s < 4; ++s) {
        if (s != site && di[s] != dj[s]) {
          rest_equal = false;
          break;
        }
      }
      if (rest_equal) out(i, j) = op(di[site], dj[site]);
    }
  }
  return out;
}

// Lifts an operator on (site_a, site_b), indexed as a*3+b, to the pipeline.
CMatrix embed_pair(const CMatrix& op, int site_a, int site_b) {
  CMatrix out = CMatrix::Zero(kPipelineDim, kPipelineDim);
  for (Eigen::Index i = 0; i < kPipelineDim; ++i) {
    const auto di = split_index(i);
    for (Eigen::Index j = 0; j < kPipelineDim; ++j) {
      const auto dj = split_index(j);
      bool rest_equal = true;
      for (int s = 0; s < 4; ++s) {
        if (s != site_a && s != site_b && di[s] != dj[s]) {
          rest_equal = false;
          break;
        }
      }
      if (rest_equal) {
        out(i, j) =
            op(di[site_a] * 3 + di[site_b], dj[site_a] * 3 + dj[site_b]);
      }
    }
  }
  return out;
}

// Photon-pair amplitudes on arm1 (x) arm2 after the 50/50 splitter, with the
// arm-pair index p1*3 + p2.
CVector split_photons(int count, bool indistinguishable) {
  CVector v = CVector::Zero(9);
  const double r = 1.0 / std::sqrt(2.0);
  switch (count) {
    case 0:
      v(0) = 1.0;
      break;
    case 1:
      v(3) = r;  // |1,0>
      v(1) = r;  // |0,1>
      break;
    case 2:
      if (indistinguishable) {
        v(6) = r;  // |2,0>
        v(2) = r;  // |0,2>
      } else {
        v(6) = 0.5;
        v(4) = r;  // |1,1>
        v(2) = 0.5;
      }
      break;
    default:
      throw std::invalid_argument("photon count beyond truncation");
  }
  return v;
}

CMatrix swap_storage_excited() {
  CMatrix u = CMatrix::Identity(3, 3);
  u(1, 1) = 0.0;
  u(2, 2) = 0.0;
  u(1, 2) = 1.0;
  u(2, 1) = 1.0;
  return u;
}

CMatrix path_phase_op(double delta) {
  CMatrix u = CMatrix::Identity(3, 3);
  u(0, 0) = std::polar(1.0, delta);
  u(1, 1) = std::polar(1.0, -delta);
  return u;
}

CMatrix storage_qubit_isometry() {
  CMatrix p = CMatrix::Zero(4, 9);
  for (Eigen::Index q1 = 0; q1 < 2; ++q1) {
    for (Eigen::Index q2 = 0; q2 < 2; ++q2) {
      p(q1 * 2 + q2, q1 * 3 + q2) = 1.0;
    }
  }
  return p;
}

}  // namespace

NodeParams::NodeParams(double a1_in, double a2_in, double delta_in)
    : a1(a1_in), a2(a2_in), delta(delta_in) {
  require(a1 >= 0.0 && a1 <= 1.0, "absorption probability a1 outside [0, 1]");
  require(a2 >= 0.0 && a2 <= 1.0, "absorption probability a2 outside [0, 1]");
  require(std::isfinite(delta), "path phase must be finite");
}

double NodeParams::phi() const {
  const double sum = a1 + a2;
  if (sum <= 0.0) return 0.0;
  return 0.5 * std::asin((a2 - a1) / sum);
}

DetectorModel DetectorModel::with(double eta, double dark) {
  require(eta >= 0.0 && eta <= 1.0, "detection efficiency outside [0, 1]");
  require(dark >= 0.0 && dark <= 1.0, "dark-count rate outside [0, 1]");
  DetectorModel det;
  det.present = true;
  det.eta = eta;
  det.dark = dark;
  return det;
}

SourceModel::SourceModel(double p0_in, double p1_in, double p2_in,
                         bool indistinguishable_in)
    : p0(p0_in), p1(p1_in), p2(p2_in), indistinguishable(indistinguishable_in) {
  require(p0 >= 0.0 && p1 >= 0.0 && p2 >= 0.0,
          "emission probabilities must be non-negative");
  require(std::abs(p0 + p1 + p2 - 1.0) <= 1e-12,
          "emission probabilities must sum to one");
}

CMatrix asymmetry_phase_op(double phi, double delta) {
  require(std::abs(phi) <= kPi / 4 + 1e-12, "asymmetry angle outside range");
  CMatrix z = CMatrix::Zero(2, 2);
  z(0, 0) = (std::cos(phi) + std::sin(phi)) * std::polar(1.0, delta);
  z(1, 1) = (std::cos(phi) - std::sin(phi)) * std::polar(1.0, -delta);
  return z;
}

DensityOp resource_closed_form(const NodeParams& node) {
  const double pbar = node.bell_weight();
  CMatrix z1 = CMatrix::Zero(4, 4);
  const CMatrix z = asymmetry_phase_op(node.phi(), node.delta);
  z1.block(0, 0, 2, 2) = z(0, 0) * CMatrix::Identity(2, 2);
  z1.block(2, 2, 2, 2) = z(1, 1) * CMatrix::Identity(2, 2);

  CVector bell = CVector::Zero(4);
  bell(1) = 1.0 / std::sqrt(2.0);
  bell(2) = 1.0 / std::sqrt(2.0);
  const CVector dressed = z1 * bell;

  CMatrix rho = pbar * (dressed * dressed.adjoint());
  rho(0, 0) += 1.0 - pbar;
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityOp(std::move(rho), true);
}

CMatrix absorption_unitary(double a) {
  require(a >= 0.0 && a <= 1.0, "absorption probability outside [0, 1]");
  CMatrix u = CMatrix::Identity(9, 9);
  const double s1 = std::sqrt(a);
  const double c1 = std::sqrt(1.0 - a);
  // One photon in the arm: |g,1> (index 1) <-> |e,0> (index 6).
  u(1, 1) = c1;
  u(6, 1) = s1;
  u(1, 6) = -s1;
  u(6, 6) = c1;
  // Two photons pass sequentially: |g,2> (index 2) <-> |e,1> (index 7).
  const double c2 = 1.0 - a;
  const double s2 = std::sqrt(1.0 - c2 * c2);
  u(2, 2) = c2;
  u(7, 2) = s2;
  u(2, 7) = -s2;
  u(7, 7) = c2;
  return u;
}

KrausSet noclick_kraus(const DetectorModel& det) {
  require(det.present, "no-click conditioning requires detectors");
  CMatrix k = CMatrix::Zero(3, 3);
  const double root = std::sqrt(1.0 - det.dark);
  k(0, 0) = root;
  k(1, 1) = root * std::sqrt(1.0 - det.eta);
  k(2, 2) = root * (1.0 - det.eta);
  const bool preserving = det.eta == 0.0 && det.dark == 0.0;
  std::vector<CMatrix> ops{std::move(k)};
  return KrausSet(std::move(ops), "no-click", preserving);
}

double acceptance_probability(const NodeParams& node,
                              const DetectorModel& det) {
  if (!det.present) return 1.0;
  const double pbar = node.bell_weight();
  const double survive = pbar + (1.0 - pbar) * (1.0 - det.eta);
  return (1.0 - det.dark) * (1.0 - det.dark) * survive;
}

double conditioned_bell_weight(const NodeParams& node,
                               const DetectorModel& det) {
  const double pbar = node.bell_weight();
  if (!det.present) return pbar;
  const double denom = pbar + (1.0 - pbar) * (1.0 - det.eta);
  if (denom <= tol::kBranchCutoff) return 0.0;
  return pbar / denom;
}

ResourceOutcome simulate_resource(const NodeParams& node,
                                  const SourceModel& source,
                                  const DetectorModel& det) {
  // Emission mixture on the full pipeline space, atoms in |0,0>.
  CMatrix rho = CMatrix::Zero(kPipelineDim, kPipelineDim);
  const std::array<double, 3> weights{source.p0, source.p1, source.p2};
  for (int count = 0; count < 3; ++count) {
    if (weights[count] <= 0.0) continue;
    CVector v = CVector::Zero(kPipelineDim);
    v.segment(0, 9) = split_photons(count, source.indistinguishable);
    rho += weights[count] * (v * v.adjoint());
  }
  DensityOp state(std::move(rho), true);

  state = apply_kraus(
      state, KrausSet::unitary(embed_pair(absorption_unitary(node.a1), 0, 2),
                               "absorb-arm1"));
  state = apply_kraus(
      state, KrausSet::unitary(embed_pair(absorption_unitary(node.a2), 1, 3),
                               "absorb-arm2"));
  state = apply_kraus(
      state, KrausSet::unitary(embed_one(swap_storage_excited(), 0), "pi-1"));
  state = apply_kraus(
      state, KrausSet::unitary(embed_one(swap_storage_excited(), 1), "pi-2"));
  state = apply_kraus(
      state,
      KrausSet::unitary(embed_one(path_phase_op(node.delta), 0), "path-phase"));

  if (det.present) {
    const KrausSet arm_noclick = noclick_kraus(det);
    state = apply_kraus(
        state, KrausSet::single(embed_one(arm_noclick.ops().front(), 2),
                                "no-click-arm1"));
    state = apply_kraus(
        state, KrausSet::single(embed_one(arm_noclick.ops().front(), 3),
                                "no-click-arm2"));
  }

  const double accept = det.present ? state.trace() : 1.0;
  ResourceOutcome out{accept, DensityOp::basis_state(4, 0), 0.0};
  if (accept < 1e-14) {
    out.accept_prob = std::max(accept, 0.0);
    return out;
  }

  DensityOp atoms =
      partial_trace(state, kPipelineDims, std::vector<int>{0, 1}).normalized();

  double excited_population = 0.0;
  for (Eigen::Index i = 0; i < 9; ++i) {
    if (i / 3 == 2 || i % 3 == 2) {
      excited_population += atoms.matrix()(i, i).real();
    }
  }
  if (excited_population > 1e-12) {
    throw std::domain_error("excited level still populated after the pulses");
  }

  DensityOp qubits =
      apply_kraus(atoms,
                  KrausSet::single(storage_qubit_isometry(), "storage-qubits"))
          .normalized();
  qubits.check_invariants();

  out.state = qubits;
  out.bell_weight =
      qubits.matrix()(1, 1).real() + qubits.matrix()(2, 2).real();
  return out;
}

}  // namespace parityproj
