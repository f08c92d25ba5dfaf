#include "parityproj/densop.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parityproj {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::vector<Eigen::Index> digits_of(Eigen::Index index,
                                    const std::vector<Eigen::Index>& dims) {
  std::vector<Eigen::Index> d(dims.size());
  for (std::size_t s = dims.size(); s-- > 0;) {
    d[s] = index % dims[s];
    index /= dims[s];
  }
  return d;
}

}  // namespace

double hermiticity_defect(const CMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

PureState::PureState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  require(amplitudes_.size() >= 1, "pure state must have dimension >= 1");
  require(amplitudes_.size() <= kMaxDim, "pure state exceeds dimension cap");
  require(std::abs(amplitudes_.squaredNorm() - 1.0) <= 1e-12,
          "pure state amplitudes must be normalized");
}

PureState PureState::basis(Eigen::Index dim, Eigen::Index k) {
  require(dim >= 1 && k >= 0 && k < dim, "basis index out of range");
  CVector v = CVector::Zero(dim);
  v(k) = 1.0;
  return PureState(std::move(v));
}

DensityOp::DensityOp(CMatrix matrix, bool normalized)
    : matrix_(std::move(matrix)), normalized_(normalized) {
  require(matrix_.rows() == matrix_.cols(), "density operator must be square");
  require(matrix_.rows() >= 1, "density operator must have dimension >= 1");
  require(matrix_.rows() <= kMaxDim, "density operator exceeds dimension cap");
  require(hermiticity_defect(matrix_) <= tol::kHermitian,
          "density operator is not Hermitian");
  const double tr = matrix_.trace().real();
  require(tr >= -tol::kHermitian && tr <= 1.0 + tol::kHermitian,
          "density operator trace outside [0, 1]");
  if (normalized_) {
    require(std::abs(tr - 1.0) <= tol::kTraceOne,
            "normalized density operator must have unit trace");
  }
}

DensityOp DensityOp::from_pure(const PureState& psi) {
  const CVector& v = psi.amplitudes();
  CMatrix m = v * v.adjoint();
  m = 0.5 * (m + m.adjoint().eval());
  return DensityOp(std::move(m), true);
}

DensityOp DensityOp::basis_state(Eigen::Index dim, Eigen::Index k) {
  return from_pure(PureState::basis(dim, k));
}

DensityOp DensityOp::maximally_mixed(Eigen::Index dim) {
  require(dim >= 1 && dim <= kMaxDim, "dimension out of range");
  CMatrix m = CMatrix::Identity(dim, dim) / static_cast<double>(dim);
  return DensityOp(std::move(m), true);
}

DensityOp DensityOp::normalized() const {
  const double tr = trace();
  if (tr < tol::kBranchCutoff) {
    throw std::domain_error("cannot normalize an annihilated branch");
  }
  return DensityOp(matrix_ / tr, true);
}

std::vector<double> DensityOp::spectrum() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix_,
                                                Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

void DensityOp::check_invariants() const {
  if (hermiticity_defect(matrix_) > tol::kHermitian) {
    throw std::domain_error("invariant violation: not Hermitian");
  }
  const double tr = trace();
  if (!(tr > 0.0 && tr <= 1.0 + tol::kHermitian)) {
    throw std::domain_error("invariant violation: trace outside (0, 1]");
  }
  if (normalized_ && std::abs(tr - 1.0) > tol::kTraceOne) {
    throw std::domain_error("invariant violation: trace != 1");
  }
  const auto ev = spectrum();
  if (!ev.empty() && ev.front() < -tol::kPsd) {
    throw std::domain_error("invariant violation: negative eigenvalue");
  }
}

KrausSet::KrausSet(std::vector<CMatrix> ops, std::string label,
                   bool trace_preserving)
    : ops_(std::move(ops)),
      label_(std::move(label)),
      trace_preserving_(trace_preserving) {
  require(!ops_.empty(), "Kraus set must contain at least one operator");
  const Eigen::Index rows = ops_.front().rows();
  const Eigen::Index cols = ops_.front().cols();
  require(rows >= 1 && rows <= kMaxDim && cols >= 1 && cols <= kMaxDim,
          "Kraus dimension out of range");
  CMatrix sum = CMatrix::Zero(cols, cols);
  for (const auto& k : ops_) {
    require(k.rows() == rows && k.cols() == cols,
            "Kraus operators must share one shape");
    sum += k.adjoint() * k;
  }
  if (trace_preserving_) {
    require((sum - CMatrix::Identity(cols, cols)).cwiseAbs().maxCoeff() <=
                tol::kCompleteness,
            "trace-preserving Kraus set must resolve the identity");
  } else {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sum, Eigen::EigenvaluesOnly);
    require(solver.eigenvalues().maxCoeff() <= 1.0 + tol::kCompleteness,
            "Kraus set must satisfy sum K^dag K <= I");
  }
}

KrausSet KrausSet::unitary(CMatrix u, std::string label) {
  const Eigen::Index d = u.rows();
  require(d == u.cols() &&
              (u.adjoint() * u - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() <=
                  tol::kCompleteness,
          "operator is not unitary");
  std::vector<CMatrix> ops;
  ops.push_back(std::move(u));
  return KrausSet(std::move(ops), std::move(label), true);
}

KrausSet KrausSet::single(CMatrix k, std::string label) {
  std::vector<CMatrix> ops;
  ops.push_back(std::move(k));
  return KrausSet(std::move(ops), std::move(label), false);
}

KrausSet KrausSet::projector(CMatrix p, std::string label) {
  require((p * p - p).cwiseAbs().maxCoeff() <= tol::kCompleteness &&
              hermiticity_defect(p) <= tol::kCompleteness,
          "operator is not an orthogonal projector");
  return single(std::move(p), std::move(label));
}

DensityOp tensor(const DensityOp& a, const DensityOp& b) {
  if (a.dim() * b.dim() > kMaxDim) {
    throw std::invalid_argument("tensor product exceeds dimension cap");
  }
  CMatrix out(a.dim() * b.dim(), a.dim() * b.dim());
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    for (Eigen::Index j = 0; j < a.dim(); ++j) {
      out.block(i * b.dim(), j * b.dim(), b.dim(), b.dim()) =
          a.matrix()(i, j) * b.matrix();
    }
  }
  return DensityOp(std::move(out), a.is_normalized() && b.is_normalized());
}

PureState tensor(const PureState& a, const PureState& b) {
  if (a.dim() * b.dim() > kMaxDim) {
    throw std::invalid_argument("tensor product exceeds dimension cap");
  }
  CVector out(a.dim() * b.dim());
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    out.segment(i * b.dim(), b.dim()) = a.amplitudes()(i) * b.amplitudes();
  }
  return PureState(std::move(out));
}

DensityOp partial_trace(const DensityOp& rho,
                        const std::vector<Eigen::Index>& dims,
                        const std::vector<int>& keep) {
  Eigen::Index total = 1;
  for (Eigen::Index d : dims) {
    require(d >= 1, "subsystem dimensions must be positive");
    total *= d;
  }
  require(total == rho.dim(), "subsystem dimensions do not factor the state");
  require(!keep.empty(), "must keep at least one subsystem");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    require(keep[i] >= 0 && keep[i] < static_cast<int>(dims.size()),
            "kept subsystem index out of range");
    require(i == 0 || keep[i] > keep[i - 1],
            "kept subsystem indices must be strictly increasing");
  }

  std::vector<int> kept_flag(dims.size(), 0);
  for (int k : keep) kept_flag[k] = 1;

  Eigen::Index out_dim = 1;
  for (int k : keep) out_dim *= dims[k];

  CMatrix out = CMatrix::Zero(out_dim, out_dim);
  for (Eigen::Index i = 0; i < total; ++i) {
    const auto di = digits_of(i, dims);
    for (Eigen::Index j = 0; j < total; ++j) {
      const auto dj = digits_of(j, dims);
      bool diagonal_on_traced = true;
      for (std::size_t s = 0; s < dims.size(); ++s) {
        if (!kept_flag[s] && di[s] != dj[s]) {
          diagonal_on_traced = false;
          break;
        }
      }
      if (!diagonal_on_traced) continue;
      Eigen::Index ri = 0;
      Eigen::Index rj = 0;
      for (int k : keep) {
        ri = ri * dims[k] + di[k];
        rj = rj * dims[k] + dj[k];
      }
      out(ri, rj) += rho.matrix()(i, j);
    }
  }
  out = 0.5 * (out + out.adjoint().eval());
  return DensityOp(std::move(out), rho.is_normalized());
}

DensityOp apply_kraus(const DensityOp& rho, const KrausSet& channel) {
  require(channel.in_dim() == rho.dim(),
          "channel dimension does not match the state");
  CMatrix out = CMatrix::Zero(channel.out_dim(), channel.out_dim());
  for (const auto& k : channel.ops()) {
    out += k * rho.matrix() * k.adjoint();
  }
  if (hermiticity_defect(out) > tol::kHermitian) {
    throw std::domain_error("channel output failed the Hermiticity check");
  }
  out = 0.5 * (out + out.adjoint().eval());
  const bool keeps_norm = rho.is_normalized() && channel.trace_preserving();
  return DensityOp(std::move(out), keeps_norm);
}

std::vector<MeasurementBranch> measure(const DensityOp& rho,
                                       const std::vector<KrausSet>& outcomes) {
  require(!outcomes.empty(), "measurement needs at least one outcome");
  CMatrix sum = CMatrix::Zero(rho.dim(), rho.dim());
  for (const auto& set : outcomes) {
    require(set.in_dim() == rho.dim(), "outcome dimension mismatch");
    for (const auto& k : set.ops()) sum += k.adjoint() * k;
  }
  if ((sum - CMatrix::Identity(rho.dim(), rho.dim())).cwiseAbs().maxCoeff() >
      tol::kCompleteness) {
    throw std::invalid_argument("measurement outcomes are not complete");
  }

  std::vector<MeasurementBranch> branches;
  branches.reserve(outcomes.size());
  double total = 0.0;
  for (const auto& set : outcomes) {
    DensityOp sub = apply_kraus(rho, set);
    MeasurementBranch branch;
    branch.probability = sub.trace();
    total += branch.probability;
    if (branch.probability > tol::kBranchCutoff) {
      branch.state = sub.normalized();
    }
    branches.push_back(std::move(branch));
  }
  if (std::abs(total - rho.trace()) > tol::kCompleteness) {
    throw std::domain_error("branch probabilities do not resolve the trace");
  }
  return branches;
}

}  // namespace parityproj
