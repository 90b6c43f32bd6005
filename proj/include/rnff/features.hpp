#ifndef RNFF_FEATURES_HPP
#define RNFF_FEATURES_HPP

#include <algorithm>
#include <cmath>
#include <iostream>
#include <utility>
#include <vector>

#include "rnff/errors.hpp"
#include "rnff/grid.hpp"
#include "rnff/linalg.hpp"
#include "rnff/rng.hpp"
#include "rnff/spectral.hpp"
#include "rnff/types.hpp"

// Fourier feature maps and low-rank kernel matrices built from a factorized
// spectral matrix, plus the brute-force oracles used to check them.

namespace rnff {

// How the grid weights are turned into features.
//
//  - Complex:       [a(x)]_k = exp(i w_k x); weights are circular complex.
//                   Pairs naturally with a symmetric grid.
//  - RealHermitian: exp basis on the nonnegative grid with the origin entry
//                   halved; weights carry Hermitian symmetry W_{-k} = conj(W_k)
//                   and real spectral densities make them real-valued.
//  - RealCosine:    cosine basis with the origin entry halved; the real-weight
//                   simplification of RealHermitian.
enum class FeatureMode { Complex, RealHermitian, RealCosine };

inline const char* to_string(FeatureMode mode) {
  switch (mode) {
    case FeatureMode::Complex: return "complex";
    case FeatureMode::RealHermitian: return "real_hermitian";
    case FeatureMode::RealCosine: return "real_cosine";
  }
  return "?";
}

// Basis row for one location. The origin entry is 1/2 in the real modes; the
// complex mode uses plain exponentials at full weight.
inline RowVectorXcd fourier_basis(double x, const FrequencyGrid& grid, FeatureMode mode) {
  RowVectorXcd row(grid.m);
  for (Index k = 0; k < grid.m; ++k) {
    const double w = grid.frequencies[k];
    switch (mode) {
      case FeatureMode::Complex:
        row[k] = std::exp(Complex(0.0, w * x));
        break;
      case FeatureMode::RealHermitian:
        row[k] = (w == 0.0) ? Complex(0.5, 0.0) : std::exp(Complex(0.0, w * x));
        break;
      case FeatureMode::RealCosine:
        row[k] = (w == 0.0) ? Complex(0.5, 0.0) : Complex(std::cos(w * x), 0.0);
        break;
    }
  }
  return row;
}

// Factor C with C C^H = S Delta_omega^2 (+ jitter). Thin: p <= m columns.
struct FeatureFactor {
  MatrixXcd C;
  FrequencyGrid grid;
  FeatureMode mode = FeatureMode::Complex;
};

inline FeatureFactor make_feature_factor(const FrequencyGrid& grid, const HermitianPsd& spectral,
                                         FeatureMode mode, double jitter = 0.0) {
  if (mode != FeatureMode::Complex && grid.frequencies.size() > 0 && grid.frequencies[0] < 0.0) {
    throw std::invalid_argument(
        "make_feature_factor: real modes use the nonnegative grid; negative "
        "frequencies are covered by the Hermitian extension");
  }
  const double dw2 = grid.delta_omega * grid.delta_omega;
  const HermitianPsd scaled(MatrixXcd(spectral.matrix() * dw2));
  FeatureFactor factor;
  factor.C = hermitian_psd_factor(scaled, jitter);
  factor.grid = grid;
  factor.mode = mode;
  return factor;
}

inline FeatureFactor make_feature_factor(const FrequencyGrid& grid, const SpectralModel& model,
                                         FeatureMode mode, double jitter = 0.0) {
  return make_feature_factor(grid, build_spectral_matrix(grid, model), mode, jitter);
}

// Feature rows L with [L]_i = fourier_basis(x_i) * C.
struct LowRankKernel {
  MatrixXcd L;
  VectorXd locations;
  FeatureMode mode = FeatureMode::Complex;
};

inline LowRankKernel build_feature_matrix(const VectorXd& xs, const FeatureFactor& factor,
                                          bool strict_aliasing = false) {
  const double x_max = xs.size() > 0 ? xs.cwiseAbs().maxCoeff() : 0.0;
  if (!validate_aliasing(factor.grid, x_max)) {
    const std::string msg = "aliasing condition violated: max|x| = " + std::to_string(x_max) +
                            " >= pi/delta_omega = " +
                            std::to_string(kPi / factor.grid.delta_omega);
    if (strict_aliasing) throw AliasingViolation(msg);
    std::cerr << "warning: " << msg << "\n";
  }
  LowRankKernel lr;
  lr.locations = xs;
  lr.mode = factor.mode;
  lr.L.resize(xs.size(), factor.C.cols());
  for (Index i = 0; i < xs.size(); ++i) {
    lr.L.row(i) = fourier_basis(xs[i], factor.grid, factor.mode) * factor.C;
  }
  return lr;
}

namespace detail {

inline MatrixXd strip_imaginary(const MatrixXcd& gram, const char* where) {
  const double scale = gram.size() > 0 ? gram.cwiseAbs().maxCoeff() : 0.0;
  const double residue = gram.size() > 0 ? gram.imag().cwiseAbs().maxCoeff() : 0.0;
  if (residue > 1e-8 * scale) {
    throw NonRealKernel(std::string(where) + ": imaginary residue " + std::to_string(residue) +
                        " exceeds 1e-8 * max|entry|; spectral symmetry violated");
  }
  MatrixXd real = gram.real();
  return 0.5 * (real + real.transpose());
}

}  // namespace detail

// Gram matrix of the features; PSD by construction in every mode.
//
//  - Complex:       Re[L L^H], valid when the density satisfies the
//                   real-kernel symmetry s(w,w') = conj(s(-w,-w')); the
//                   imaginary residue is checked, not silently dropped.
//  - RealHermitian: 4 Re(L) Re(L)^T = 2 Re[L L^H] + 2 Re[L L^T]. The second
//                   term is the pseudo-covariance contribution of real-valued
//                   spectral weights; with it the exp and cosine reductions
//                   of the same real process agree exactly.
//  - RealCosine:    4 L L^T with a realness check (C is real whenever the
//                   density is real-valued, as the mode assumes).
inline MatrixXd kernel_matrix(const LowRankKernel& lr) {
  switch (lr.mode) {
    case FeatureMode::Complex:
      return detail::strip_imaginary(lr.L * lr.L.adjoint(), "kernel_matrix[complex]");
    case FeatureMode::RealHermitian: {
      const MatrixXd real_part = lr.L.real();
      MatrixXd k = 4.0 * real_part * real_part.transpose();
      return 0.5 * (k + MatrixXd(k.transpose()));
    }
    case FeatureMode::RealCosine:
      return detail::strip_imaginary(4.0 * lr.L * lr.L.transpose(), "kernel_matrix[cosine]");
  }
  return MatrixXd();
}

// Raw complex Gram L L^H for callers that want the unreduced object.
inline MatrixXcd kernel_matrix_complex(const LowRankKernel& lr) {
  return lr.L * lr.L.adjoint();
}

// Direct Riemann double sum over the grid, no factorization anywhere:
// the independent check of the factorized path. O(n^2 m^2); oracle use only.
inline MatrixXd riemann_kernel_oracle(const VectorXd& xs, const FrequencyGrid& grid,
                                      const SpectralModel& model,
                                      FeatureMode mode = FeatureMode::Complex) {
  const Index n = xs.size();
  const Index m = grid.m;
  const double dw2 = grid.delta_omega * grid.delta_omega;
  MatrixXcd s(m, m);
  for (Index j = 0; j < m; ++j) {
    for (Index k = 0; k < m; ++k) {
      s(j, k) = eval_spectral(model, grid.frequencies[j], grid.frequencies[k]);
    }
  }
  MatrixXd kernel(n, n);
  for (Index i = 0; i < n; ++i) {
    const RowVectorXcd bi = fourier_basis(xs[i], grid, mode);
    for (Index l = 0; l < n; ++l) {
      const RowVectorXcd bl = fourier_basis(xs[l], grid, mode);
      Complex hermitian_sum = 0.0;
      Complex plain_sum = 0.0;
      for (Index j = 0; j < m; ++j) {
        for (Index k = 0; k < m; ++k) {
          hermitian_sum += bi[j] * s(j, k) * std::conj(bl[k]);
          plain_sum += bi[j] * s(j, k) * bl[k];
        }
      }
      switch (mode) {
        case FeatureMode::Complex:
          kernel(i, l) = (hermitian_sum * dw2).real();
          break;
        case FeatureMode::RealHermitian:
          kernel(i, l) = 2.0 * (hermitian_sum * dw2).real() + 2.0 * (plain_sum * dw2).real();
          break;
        case FeatureMode::RealCosine:
          kernel(i, l) = 4.0 * (plain_sum * dw2).real();
          break;
      }
    }
  }
  return kernel;
}

// Raw complex double sum sum_jk exp(i(w_j x - w_k x')) s_jk dw^2; the complex
// counterpart of the oracle above, for checks on the unreduced object.
inline MatrixXcd riemann_kernel_oracle_complex(const VectorXd& xs, const FrequencyGrid& grid,
                                               const SpectralModel& model) {
  const Index n = xs.size();
  const Index m = grid.m;
  const double dw2 = grid.delta_omega * grid.delta_omega;
  MatrixXcd kernel(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index l = 0; l < n; ++l) {
      Complex sum = 0.0;
      for (Index j = 0; j < m; ++j) {
        for (Index k = 0; k < m; ++k) {
          sum += std::exp(Complex(0.0, grid.frequencies[j] * xs[i] -
                                           grid.frequencies[k] * xs[l])) *
                 eval_spectral(model, grid.frequencies[j], grid.frequencies[k]);
        }
      }
      kernel(i, l) = sum * dw2;
    }
  }
  return kernel;
}

// Inverse-CDF sampler over a fine discretization of a nonnegative
// 2-D density on [-box, box]^2. Exactness is irrelevant for the failure-mode
// demonstration below; determinism is what matters.
class DensitySampler2D {
 public:
  DensitySampler2D(const SpectralModel& model, double box, Index bins) : box_(box), bins_(bins) {
    const double cell = 2.0 * box / static_cast<double>(bins);
    cdf_.resize(static_cast<std::size_t>(bins) * static_cast<std::size_t>(bins));
    double running = 0.0;
    for (Index i = 0; i < bins; ++i) {
      const double w = -box + (static_cast<double>(i) + 0.5) * cell;
      for (Index j = 0; j < bins; ++j) {
        const double wp = -box + (static_cast<double>(j) + 0.5) * cell;
        const double value = eval_spectral(model, w, wp).real();
        running += std::max(value, 0.0) * cell * cell;
        cdf_[static_cast<std::size_t>(i * bins + j)] = running;
      }
    }
    total_mass_ = running;
  }

  double total_mass() const { return total_mass_; }

  std::pair<double, double> sample(SplitMix64& rng) const {
    const double target = rng.uniform() * total_mass_;
    const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), target);
    const Index flat = static_cast<Index>(it - cdf_.begin());
    const double cell = 2.0 * box_ / static_cast<double>(bins_);
    const Index i = flat / bins_;
    const Index j = flat % bins_;
    return {-box_ + (static_cast<double>(i) + 0.5) * cell,
            -box_ + (static_cast<double>(j) + 0.5) * cell};
  }

 private:
  double box_;
  Index bins_;
  std::vector<double> cdf_;
  double total_mass_ = 0.0;
};

// Naive Monte Carlo estimator (sigma^2/m) sum_j exp(i(W_j x - W'_j x')) with
// frequency pairs drawn from the normalized density. Exists to demonstrate
// that it is not positive semi-definite, unlike the factorized path.
inline MatrixXcd naive_mc_kernel(const VectorXd& xs, const DensitySampler2D& sampler,
                                 Index m_samples, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::pair<double, double>> draws(static_cast<std::size_t>(m_samples));
  for (auto& d : draws) d = sampler.sample(rng);

  const Index n = xs.size();
  const double scale = sampler.total_mass() / static_cast<double>(m_samples);
  MatrixXcd kernel = MatrixXcd::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index l = 0; l < n; ++l) {
      Complex sum = 0.0;
      for (const auto& [w, wp] : draws) {
        sum += std::exp(Complex(0.0, w * xs[i] - wp * xs[l]));
      }
      kernel(i, l) = scale * sum;
    }
  }
  return kernel;
}

// || K_hat - K_exact ||_F / || K_exact ||_F
inline double relative_error(const MatrixXd& k_hat, const MatrixXd& k_exact) {
  if (k_hat.rows() != k_exact.rows() || k_hat.cols() != k_exact.cols()) {
    throw std::invalid_argument("relative_error: shape mismatch");
  }
  const double reference = k_exact.norm();
  if (reference == 0.0) throw ZeroReference("relative_error: reference matrix has zero norm");
  return (k_hat - k_exact).norm() / reference;
}

}  // namespace rnff

#endif  // RNFF_FEATURES_HPP
