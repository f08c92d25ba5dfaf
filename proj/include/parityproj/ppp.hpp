#pragma once

#include <array>
#include <optional>
#include <vector>

#include "parityproj/densop.hpp"
#include "parityproj/photonics.hpp"

namespace parityproj {

// Broker Z-measurement results of one round, (node 1, node 2).
using Outcome = std::array<int, 2>;

enum class Parity { even, odd };

// Parity class announced by a heralded round pair: even when the first-round
// bits anticorrelate across nodes, odd when they agree.
Parity parity_label(const Outcome& m);

// Heralding rule across the two rounds: accept iff the second-round outcome is
// the bitwise complement of the first.
bool herald_accepts(const Outcome& m, const Outcome& n);

// One measurement branch of a single round: outcome, unnormalized client-pair
// state (its trace is the branch probability).
struct RoundBranch {
  Outcome m{0, 0};
  DensityOp state;
};

// One round of the protocol: tensor the client pair with a broker-pair
// resource, apply CNOT(client -> broker) at each node, Z-measure both brokers.
std::vector<RoundBranch> run_round(const DensityOp& clients,
                                   const ResourceOutcome& resource);

struct PppBranch {
  Outcome m{0, 0};
  Outcome n{0, 0};
  bool heralded = false;
  Parity parity = Parity::even;  // meaningful only when heralded
  double probability = 0.0;
  std::optional<DensityOp> state;  // normalized; empty below 1e-12 probability
};

struct PppResult {
  double p_success = 0.0;
  double p_failure = 0.0;
  std::vector<PppBranch> branches;          // the 4 heralded outcome pairs
  std::vector<PppBranch> failure_branches;  // the 12 non-heralded pairs
};

// Two rounds plus heralding. Branch states are ensemble-averaged over the
// unreferenced global interferometer phase (a common phase offset on the
// first broker of both resources, integrated by an exact 8-point quadrature);
// heralded branches and p_success are offset-independent, non-heralded
// branches keep only the coherences a phase-unreferenced observer retains.
PppResult run_ppp(const DensityOp& clients, const ResourceOutcome& r1,
                  const ResourceOutcome& r2);

// (cos^2 2phi / 2) * pbar'^2 with the no-click conditioned Bell weight pbar'.
double success_probability_analytic(const NodeParams& node,
                                    const DetectorModel& det);

// Projector onto span{|00>, |11>} (even) or span{|01>, |10>} (odd).
CMatrix parity_projector(Parity p);

// Client pair prepared in |++>, the protocol's reference input.
DensityOp standard_clients();

}  // namespace parityproj
