#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace parityproj {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr Eigen::Index kMaxDim = 256;

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kPsd = 1e-10;
inline constexpr double kTraceOne = 1e-10;
inline constexpr double kCompleteness = 1e-10;
inline constexpr double kBranchCutoff = 1e-12;
}  // namespace tol

// Normalized pure state on a finite-dimensional Hilbert space.
class PureState {
 public:
  explicit PureState(CVector amplitudes);
  static PureState basis(Eigen::Index dim, Eigen::Index k);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const CVector& amplitudes() const { return amplitudes_; }

 private:
  CVector amplitudes_;
};

// Hermitian positive-semidefinite operator with trace in (0, 1]. Sub-normalized
// instances (trace < 1) carry measurement branches and lossy-channel outputs;
// construction additionally tolerates an annihilated branch (trace ~ 0).
//
// Construction always verifies shape, Hermiticity and the trace bound. The
// PSD eigenvalue check is deferred to check_invariants(), which module
// boundaries and the property tests invoke; running it on every intermediate
// of a long channel pipeline would dominate the runtime.
class DensityOp {
 public:
  DensityOp(CMatrix matrix, bool normalized);
  static DensityOp from_pure(const PureState& psi);
  static DensityOp basis_state(Eigen::Index dim, Eigen::Index k);
  static DensityOp maximally_mixed(Eigen::Index dim);

  Eigen::Index dim() const { return matrix_.rows(); }
  const CMatrix& matrix() const { return matrix_; }
  bool is_normalized() const { return normalized_; }
  double trace() const { return matrix_.trace().real(); }

  // Rescales to unit trace; throws std::domain_error on an annihilated branch.
  DensityOp normalized() const;

  // Real eigenvalues, ascending.
  std::vector<double> spectrum() const;

  // Full invariant audit: Hermiticity, PSD within -1e-10, 0 < trace <= 1+1e-12
  // (or |trace-1| <= 1e-10 when flagged normalized). Throws std::domain_error.
  void check_invariants() const;

 private:
  CMatrix matrix_;
  bool normalized_;
};

// Kraus decomposition of a channel: sum_k K_k rho K_k^dag. The operator sum
// must satisfy sum K^dag K <= I (equality when trace_preserving). Operators
// may be rectangular (isometries onto a subspace) as long as all share one
// shape.
class KrausSet {
 public:
  KrausSet(std::vector<CMatrix> ops, std::string label, bool trace_preserving);
  static KrausSet unitary(CMatrix u, std::string label);
  static KrausSet single(CMatrix k, std::string label);  // non-trace-preserving
  static KrausSet projector(CMatrix p, std::string label);

  const std::vector<CMatrix>& ops() const { return ops_; }
  const std::string& label() const { return label_; }
  bool trace_preserving() const { return trace_preserving_; }
  Eigen::Index in_dim() const { return ops_.front().cols(); }
  Eigen::Index out_dim() const { return ops_.front().rows(); }

 private:
  std::vector<CMatrix> ops_;
  std::string label_;
  bool trace_preserving_;
};

struct MeasurementBranch {
  double probability = 0.0;
  // Normalized post-state; empty when probability < 1e-12.
  std::optional<DensityOp> state;
};

// Kronecker product; rejects results beyond kMaxDim.
DensityOp tensor(const DensityOp& a, const DensityOp& b);
PureState tensor(const PureState& a, const PureState& b);

// Traces out every subsystem not listed in `keep`. `dims` are the subsystem
// dimensions in tensor order; `keep` is a strictly increasing index subset.
// Kept subsystems retain their original relative order.
DensityOp partial_trace(const DensityOp& rho,
                        const std::vector<Eigen::Index>& dims,
                        const std::vector<int>& keep);

// sum_k K rho K^dag, symmetrized to (M + M^dag)/2 after verifying the
// pre-symmetrization Hermiticity defect is below 1e-12.
DensityOp apply_kraus(const DensityOp& rho, const KrausSet& channel);

// Branch enumeration for a complete projective (or more generally Kraus)
// measurement. Branch probabilities sum to trace(rho) within 1e-10.
std::vector<MeasurementBranch> measure(const DensityOp& rho,
                                       const std::vector<KrausSet>& outcomes);

// Largest |m - m^dag| entry; convenience for tests.
double hermiticity_defect(const CMatrix& m);

}  // namespace parityproj
