#ifndef RNFF_LINALG_HPP
#define RNFF_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "rnff/errors.hpp"
#include "rnff/types.hpp"

// Complex/real dense primitives: Hermitian PSD factorization, low-rank
// Woodbury solves and low-rank log-determinants. Everything here is a pure
// function of its inputs.

namespace rnff {

// Hermitian matrix with entry(i,j) == conj(entry(j,i)) enforced exactly by
// averaging with the conjugate transpose at construction.
class HermitianPsd {
 public:
  HermitianPsd() = default;

  explicit HermitianPsd(const MatrixXcd& raw) {
    if (raw.rows() != raw.cols()) {
      throw NonHermitianInput("HermitianPsd: matrix must be square");
    }
    const double norm = raw.norm();
    const double defect = (raw - raw.adjoint()).norm();
    if (norm > 0.0 && defect > 1e-12 * norm) {
      throw NonHermitianInput("HermitianPsd: relative symmetry defect " +
                              std::to_string(defect / norm) + " exceeds 1e-12");
    }
    matrix_ = 0.5 * (raw + raw.adjoint());
  }

  Index dim() const { return matrix_.rows(); }
  const MatrixXcd& matrix() const { return matrix_; }
  double trace() const { return matrix_.real().trace(); }

 private:
  MatrixXcd matrix_;
};

namespace detail {

// Canonical column phases: rotate each column so its first nonnegligible
// component is real and positive. Removes the unit-phase gauge freedom of
// eigenvectors, making the factor deterministic.
inline void canonicalize_phases(MatrixXcd& vec) {
  for (Index j = 0; j < vec.cols(); ++j) {
    const double colmax = vec.col(j).cwiseAbs().maxCoeff();
    if (colmax == 0.0) continue;
    for (Index i = 0; i < vec.rows(); ++i) {
      const Complex v = vec(i, j);
      if (std::abs(v) > 1e-12 * colmax) {
        vec.col(j) *= std::conj(v) / std::abs(v);
        break;
      }
    }
  }
}

}  // namespace detail

// Factor S + jitter*I = C * C^H through a Hermitian eigendecomposition with
// eigenvalue clipping. Eigenpairs with lambda < 1e-12 * lambda_max are
// dropped, so C is thin (dim x p with p <= dim); callers must not assume
// p == dim. Eigenvalues are ordered descending, ties keep the solver order,
// and column phases are canonicalized.
inline MatrixXcd hermitian_psd_factor(const HermitianPsd& spectral, double jitter = 0.0) {
  const Index dim = spectral.dim();
  MatrixXcd shifted = spectral.matrix();
  shifted.diagonal().array() += jitter;

  Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(shifted);
  if (eig.info() != Eigen::Success) {
    throw IndefiniteInput("hermitian_psd_factor: eigendecomposition failed");
  }
  const VectorXd values = eig.eigenvalues();

  const double mean_diag = dim > 0 ? shifted.real().trace() / static_cast<double>(dim) : 0.0;
  const double min_value = dim > 0 ? values.minCoeff() : 0.0;
  if (min_value < -1e-6 * std::abs(mean_diag)) {
    throw IndefiniteInput("hermitian_psd_factor: most-negative eigenvalue " +
                          std::to_string(min_value) + " below tolerance even after jitter");
  }

  const double max_value = dim > 0 ? values.maxCoeff() : 0.0;
  const double clip = 1e-12 * std::max(max_value, 0.0);

  std::vector<Index> order(static_cast<std::size_t>(dim));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&values](Index a, Index b) { return values[a] > values[b]; });

  Index rank = 0;
  for (Index k : order) {
    if (values[k] > clip && values[k] > 0.0) ++rank;
  }

  MatrixXcd factor(dim, rank);
  Index col = 0;
  for (Index k : order) {
    if (values[k] > clip && values[k] > 0.0) {
      factor.col(col++) = eig.eigenvectors().col(k) * std::sqrt(values[k]);
    }
  }
  detail::canonicalize_phases(factor);
  return factor;
}

inline MatrixXcd hermitian_psd_factor(const MatrixXcd& raw, double jitter = 0.0) {
  return hermitian_psd_factor(HermitianPsd(raw), jitter);
}

namespace detail {

// Inner p x p system sigma2*I + L^T L, decomposed once and reused by the
// solve, the trace and the log-determinant. Eigendecomposition rather than
// Cholesky so the condition estimate falls out for free.
struct InnerSystem {
  Eigen::SelfAdjointEigenSolver<MatrixXd> eig;
  MatrixXd gram;  // L^T L

  InnerSystem(const MatrixXd& low_rank, double sigma2) {
    gram = low_rank.transpose() * low_rank;
    MatrixXd inner = gram;
    inner.diagonal().array() += sigma2;
    eig.compute(inner);
    const Index p = inner.rows();
    if (p > 0) {
      const double lo = eig.eigenvalues().minCoeff();
      const double hi = eig.eigenvalues().maxCoeff();
      if (lo <= 0.0 || hi / lo > 1e14) {
        throw SingularInnerSystem("low-rank inner system condition estimate exceeds 1e14");
      }
    }
  }

  MatrixXd solve(const MatrixXd& rhs) const {
    if (gram.rows() == 0) return MatrixXd(0, rhs.cols());
    return eig.eigenvectors() *
           eig.eigenvalues().cwiseInverse().asDiagonal() *
           (eig.eigenvectors().transpose() * rhs);
  }
};

}  // namespace detail

// (L L^T + sigma2 I)^{-1} z via the p x p inner system; the n x n matrix is
// never formed. Cost O(n p^2).
inline VectorXd woodbury_solve(const MatrixXd& low_rank, double sigma2, const VectorXd& z) {
  const detail::InnerSystem inner(low_rank, sigma2);
  if (low_rank.cols() == 0) return z / sigma2;
  const VectorXd projected = low_rank.transpose() * z;
  return (z - low_rank * inner.solve(projected)) / sigma2;
}

// Same identity applied columnwise: (L L^T + sigma2 I)^{-1} L = L (sigma2 I + L^T L)^{-1}.
inline MatrixXd woodbury_solve_features(const MatrixXd& low_rank, double sigma2) {
  const detail::InnerSystem inner(low_rank, sigma2);
  if (low_rank.cols() == 0) return low_rank;
  return low_rank * inner.solve(MatrixXd::Identity(low_rank.cols(), low_rank.cols()));
}

// log det(L L^T + sigma2 I) = (n - p) log sigma2 + log det(L^T L + sigma2 I_p).
inline double lowrank_logdet(const MatrixXd& low_rank, double sigma2) {
  const detail::InnerSystem inner(low_rank, sigma2);
  const Index n = low_rank.rows();
  const Index p = low_rank.cols();
  double logdet = static_cast<double>(n - p) * std::log(sigma2);
  for (Index k = 0; k < p; ++k) logdet += std::log(inner.eig.eigenvalues()[k]);
  return logdet;
}

// trace((L L^T + sigma2 I)^{-1}); companion of the solve for gradient work.
inline double lowrank_inverse_trace(const MatrixXd& low_rank, double sigma2) {
  const detail::InnerSystem inner(low_rank, sigma2);
  const Index n = low_rank.rows();
  const Index p = low_rank.cols();
  // Sigma shares its nonzero-shifted spectrum with the inner system:
  // eigenvalues are mu_k = g_k + sigma2 (p of them) plus sigma2 repeated n - p.
  double trace = static_cast<double>(n - p) / sigma2;
  for (Index k = 0; k < p; ++k) trace += 1.0 / inner.eig.eigenvalues()[k];
  return trace;
}

}  // namespace rnff

#endif  // RNFF_LINALG_HPP
