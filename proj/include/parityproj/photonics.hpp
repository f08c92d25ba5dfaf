#pragma once

#include "parityproj/densop.hpp"

namespace parityproj {

// Per-arm absorption probabilities and interferometer path phase of one
// emit-split-absorb resource attempt. Basis order of the broker pair is
// |00>, |01>, |10>, |11>.
struct NodeParams {
  double a1 = 0.0;
  double a2 = 0.0;
  double delta = 0.0;

  NodeParams(double a1, double a2, double delta = 0.0);

  // Mean single-absorption weight of the unconditioned resource.
  double bell_weight() const { return 0.5 * (a1 + a2); }

  // Asymmetry angle: sin(2 phi) = (a2 - a1) / (a1 + a2), phi in [-pi/4, pi/4];
  // zero when both arms are dark.
  double phi() const;
};

// No-click detector pair at the interferometer outputs. `eta` is the photon
// detection efficiency, `dark` the per-attempt dark-count probability. dark = 1
// is accepted (every attempt clicks, nothing is ever heralded).
struct DetectorModel {
  bool present = false;
  double eta = 1.0;
  double dark = 0.0;

  static DetectorModel none() { return DetectorModel{}; }
  static DetectorModel with(double eta, double dark = 0.0);
};

// Photon-number statistics of the emission pulse. p0/p1/p2 must sum to one.
// With `indistinguishable` the two-photon component bunches at the splitter
// (|20> + |02>)/sqrt(2); otherwise it routes binomially.
struct SourceModel {
  double p0 = 0.0;
  double p1 = 1.0;
  double p2 = 0.0;
  bool indistinguishable = true;

  SourceModel(double p0, double p1, double p2, bool indistinguishable = true);
  static SourceModel ideal() { return SourceModel(0.0, 1.0, 0.0); }
};

// One prepared (and, with detectors, no-click conditioned) broker pair.
struct ResourceOutcome {
  double accept_prob = 0.0;
  DensityOp state;           // normalized 4-dim broker-pair state
  double bell_weight = 0.0;  // population of span{|01>, |10>} in `state`
};

// diag((cos phi + sin phi) e^{+i delta}, (cos phi - sin phi) e^{-i delta}):
// the single-qubit dressing that folds arm asymmetry and path phase into the
// ideal Bell resource.
CMatrix asymmetry_phase_op(double phi, double delta);

// Closed-form unconditioned resource for an ideal single-photon source:
// a dressed Bell component of weight bell_weight() plus ground filler.
DensityOp resource_closed_form(const NodeParams& node);

// Single-arm no-click Kraus operator on the truncated {0,1,2} photon space:
// sqrt(1-d) diag(1, sqrt(1-eta), 1-eta). Requires detectors present.
KrausSet noclick_kraus(const DetectorModel& det);

// Full pipeline on atoms (3-level: ground, storage, excited) x arms (photon
// number 0..2): emission mixture, 50/50 split, coherent partial-swap
// absorption in each arm, pi pulses, path phase, optional no-click
// conditioning, arm trace-out and projection onto the storage qubits.
ResourceOutcome simulate_resource(const NodeParams& node,
                                  const SourceModel& source,
                                  const DetectorModel& det);

// Two-level absorption unitary on one atom (x) arm pair, exposed for tests:
// |g,1> -> sqrt(A)|e,0> + sqrt(1-A)|g,1>, and the sequential-pass two-photon
// pair |g,2> -> sqrt(1-(1-A)^2)|e,1> + (1-A)|g,2>.
CMatrix absorption_unitary(double a);

// Acceptance probability of one attempt with an ideal source:
// (1-d)^2 (pbar + (1-pbar)(1-eta)) with detectors, 1 without.
double acceptance_probability(const NodeParams& node, const DetectorModel& det);

// Post-no-click Bell weight pbar' = pbar / (pbar + (1-pbar)(1-eta));
// defined as 0 when the attempt can never be accepted.
double conditioned_bell_weight(const NodeParams& node, const DetectorModel& det);

}  // namespace parityproj
