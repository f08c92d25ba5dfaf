#pragma once

#include <cstdint>
#include <string>

#include "parityproj/densop.hpp"
#include "parityproj/photonics.hpp"
#include "parityproj/ppp.hpp"

namespace parityproj {

// Probability below which an acceptance/success rate is reported as
// divergent rather than inverted.
inline constexpr double kDivergenceCutoff = 1e-12;

struct Figures {
  double fidelity = 0.0;
  double concurrence = 0.0;
};

enum class TrialUnit { accept, ppp };

struct TrialStats {
  double expected_per_accept = 0.0;  // analytic 1/q; +inf when divergent
  double expected_per_ppp = 0.0;     // analytic 2/(q p_cond); +inf when divergent
  double mc_mean = 0.0;
  double mc_stderr = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string generator;  // algorithm id of the sampler
};

// Wootters concurrence of a two-qubit state.
double concurrence(const DensityOp& rho);

// Overlap with the parity-class Bell state: (|00>+|11>)/sqrt(2) for even,
// (|01>+|10>)/sqrt(2) for odd.
double bell_fidelity(const DensityOp& rho, Parity parity);

// Expected emission attempts per accepted resource (1/q) or per completed
// protocol run (2/(q p_cond)), with q the per-attempt acceptance probability
// and p_cond the per-run success probability on accepted resources. Returns
// +inf when the relevant probability is below 1e-12.
double expected_trials_analytic(const NodeParams& node,
                                const DetectorModel& det, TrialUnit unit);

// Monte Carlo counterpart; same analytic fields plus the sampled mean and its
// standard error for `unit`. Deterministic for fixed (seed, samples); each
// sample uses an independent substream. Throws std::domain_error when the
// analytic expectation diverges.
TrialStats expected_trials_mc(const NodeParams& node, const DetectorModel& det,
                              TrialUnit unit, std::uint64_t samples,
                              std::uint64_t seed);

// Bell fidelity and concurrence of the heralded output under an imperfect
// source (and optional detectors). Heralded branches are probability-mixed
// within each parity class, figures are computed per class and averaged with
// the class probabilities. Throws std::domain_error when nothing is heralded.
Figures heralded_figures(const NodeParams& node, const SourceModel& source,
                         const DetectorModel& det, const DensityOp& clients);
Figures heralded_figures(const NodeParams& node, const SourceModel& source,
                         const DetectorModel& det);  // clients |++>

// heralded_figures without detectors: the source-imperfection study.
Figures source_fault_analysis(const NodeParams& node, const SourceModel& source,
                              const DensityOp& clients);
Figures source_fault_analysis(const NodeParams& node, const SourceModel& source);

}  // namespace parityproj
