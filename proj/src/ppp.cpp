#include "parityproj/ppp.hpp"

#include <cmath>
#include <stdexcept>

namespace parityproj {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Round layout: [client1, client2, broker1, broker2], one qubit each; basis
// index bits in that order (client1 most significant).
const std::vector<Eigen::Index> kRoundDims{2, 2, 2, 2};

int bit_of(Eigen::Index i, int site) { return (i >> (3 - site)) & 1; }

CMatrix cnot(int control_site, int target_site) {
  CMatrix u = CMatrix::Zero(16, 16);
  for (Eigen::Index i = 0; i < 16; ++i) {
    Eigen::Index j = i;
    if (bit_of(i, control_site) == 1) j = i ^ (Eigen::Index{8} >> target_site);
    u(j, i) = 1.0;
  }
  return u;
}

const CMatrix& cnot_node1() {
  static const CMatrix u = cnot(0, 2);
  return u;
}

const CMatrix& cnot_node2() {
  static const CMatrix u = cnot(1, 3);
  return u;
}

CMatrix broker_projector(const Outcome& m) {
  CMatrix p = CMatrix::Zero(16, 16);
  for (Eigen::Index i = 0; i < 16; ++i) {
    if (bit_of(i, 2) == m[0] && bit_of(i, 3) == m[1]) p(i, i) = 1.0;
  }
  return p;
}

// Common phase offset on the first broker qubit of a resource pair.
DensityOp shift_resource(const DensityOp& state, double theta) {
  CMatrix u = CMatrix::Zero(4, 4);
  const Complex up = std::polar(1.0, theta);
  const Complex down = std::polar(1.0, -theta);
  u(0, 0) = up;
  u(1, 1) = up;
  u(2, 2) = down;
  u(3, 3) = down;
  return apply_kraus(state, KrausSet::unitary(std::move(u), "phase-offset"));
}

}  // namespace

Parity parity_label(const Outcome& m) {
  return (m[0] ^ m[1]) == 1 ? Parity::even : Parity::odd;
}

bool herald_accepts(const Outcome& m, const Outcome& n) {
  return n[0] == 1 - m[0] && n[1] == 1 - m[1];
}

DensityOp standard_clients() {
  CVector v = CVector::Constant(4, Complex(0.5, 0.0));
  return DensityOp::from_pure(PureState(std::move(v)));
}

CMatrix parity_projector(Parity p) {
  CMatrix proj = CMatrix::Zero(4, 4);
  if (p == Parity::even) {
    proj(0, 0) = 1.0;
    proj(3, 3) = 1.0;
  } else {
    proj(1, 1) = 1.0;
    proj(2, 2) = 1.0;
  }
  return proj;
}

std::vector<RoundBranch> run_round(const DensityOp& clients,
                                   const ResourceOutcome& resource) {
  if (clients.dim() != 4 || resource.state.dim() != 4) {
    throw std::invalid_argument("round expects two client and two broker qubits");
  }
  DensityOp full = tensor(clients, resource.state);
  full = apply_kraus(full, KrausSet::unitary(cnot_node1(), "cnot-node1"));
  full = apply_kraus(full, KrausSet::unitary(cnot_node2(), "cnot-node2"));

  std::vector<RoundBranch> branches;
  branches.reserve(4);
  for (int m1 = 0; m1 < 2; ++m1) {
    for (int m2 = 0; m2 < 2; ++m2) {
      const Outcome m{m1, m2};
      DensityOp sub = apply_kraus(
          full, KrausSet::projector(broker_projector(m), "broker-z"));
      branches.push_back(RoundBranch{
          m, partial_trace(sub, kRoundDims, std::vector<int>{0, 1})});
    }
  }
  return branches;
}

PppResult run_ppp(const DensityOp& clients, const ResourceOutcome& r1,
                  const ResourceOutcome& r2) {
  if (!clients.is_normalized()) {
    throw std::invalid_argument("client pair must be normalized");
  }

  // Branch matrices averaged over the unreferenced interferometer phase.
  // Every matrix entry is a trigonometric polynomial of harmonic at most
  // four in the common offset, so an 8-point quadrature integrates exactly.
  std::array<std::array<CMatrix, 4>, 4> accum;
  for (auto& row : accum) {
    for (auto& cell : row) cell = CMatrix::Zero(4, 4);
  }

  constexpr int kOffsets = 8;
  for (int j = 0; j < kOffsets; ++j) {
    const double theta = j * (2.0 * kPi / kOffsets);
    ResourceOutcome r1s{r1.accept_prob, shift_resource(r1.state, theta),
                        r1.bell_weight};
    ResourceOutcome r2s{r2.accept_prob, shift_resource(r2.state, theta),
                        r2.bell_weight};
    const auto round1 = run_round(clients, r1s);
    for (const auto& b1 : round1) {
      const auto round2 = run_round(b1.state, r2s);
      for (const auto& b2 : round2) {
        const int mi = b1.m[0] * 2 + b1.m[1];
        const int ni = b2.m[0] * 2 + b2.m[1];
        accum[mi][ni] += b2.state.matrix() / kOffsets;
      }
    }
  }

  PppResult result;
  for (int mi = 0; mi < 4; ++mi) {
    for (int ni = 0; ni < 4; ++ni) {
      PppBranch branch;
      branch.m = Outcome{mi / 2, mi % 2};
      branch.n = Outcome{ni / 2, ni % 2};
      branch.heralded = herald_accepts(branch.m, branch.n);
      branch.parity = parity_label(branch.m);
      CMatrix mat = 0.5 * (accum[mi][ni] + accum[mi][ni].adjoint().eval());
      branch.probability = mat.trace().real();
      if (branch.probability > tol::kBranchCutoff) {
        DensityOp state(mat / branch.probability, true);
        state.check_invariants();
        branch.state = std::move(state);
      }
      if (branch.heralded) {
        result.p_success += branch.probability;
        result.branches.push_back(std::move(branch));
      } else {
        result.failure_branches.push_back(std::move(branch));
      }
    }
  }
  result.p_failure = 1.0 - result.p_success;
  return result;
}

double success_probability_analytic(const NodeParams& node,
                                    const DetectorModel& det) {
  const double cos2phi = std::cos(2.0 * node.phi());
  const double weight = conditioned_bell_weight(node, det);
  return 0.5 * cos2phi * cos2phi * weight * weight;
}

}  // namespace parityproj
