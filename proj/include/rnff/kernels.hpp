#ifndef RNFF_KERNELS_HPP
#define RNFF_KERNELS_HPP

#include <cmath>
#include <variant>

#include "rnff/errors.hpp"
#include "rnff/spectral.hpp"
#include "rnff/types.hpp"

// Closed-form kernels used as exact references.

namespace rnff {

// Locally stationary kernel: Gaussian envelope in the midpoint times a
// stationary Gaussian in the lag.
inline double k_ls(double a, double x, double x_prime) {
  const double mid = 0.5 * (x + x_prime);
  const double lag = x - x_prime;
  return std::exp(-2.0 * a * mid * mid) * std::exp(-0.5 * a * lag * lag);
}

// Harmonizable mixture kernel: k_ls modulated by a PSD-weighted sum of
// complex exponentials. Real-valued for conjugate-symmetric (etas, B); the
// imaginary residue is checked and stripped.
inline double k_hmk(const HarmonizableMixture& params, double x, double x_prime) {
  const Index q = params.etas.size();
  Complex mod = 0.0;
  for (Index i = 0; i < q; ++i) {
    for (Index j = 0; j < q; ++j) {
      mod += params.amplitude(i, j) *
             std::exp(Complex(0.0, params.etas[i] * x - params.etas[j] * x_prime));
    }
  }
  const Complex value = k_ls(params.a, x, x_prime) * mod;
  if (std::abs(value.imag()) > 1e-12 * std::max(1.0, std::abs(value.real()))) {
    throw NonRealKernel("k_hmk: imaginary residue " + std::to_string(value.imag()) +
                        " exceeds tolerance; check conjugate symmetry of etas/B");
  }
  return value.real();
}

inline double k_rbf(double lengthscale, double variance, double x, double x_prime) {
  const double lag = x - x_prime;
  return variance * std::exp(-lag * lag / (2.0 * lengthscale * lengthscale));
}

struct RbfParams {
  double lengthscale = 1.0;
  double variance = 1.0;
};

using KernelParams = std::variant<LocallyStationary, HarmonizableMixture, RbfParams>;

inline double eval_kernel(const KernelParams& params, double x, double x_prime) {
  if (const auto* ls = std::get_if<LocallyStationary>(&params)) {
    return k_ls(ls->a, x, x_prime);
  }
  if (const auto* hmk = std::get_if<HarmonizableMixture>(&params)) {
    return k_hmk(*hmk, x, x_prime);
  }
  const auto& rbf = std::get<RbfParams>(params);
  return k_rbf(rbf.lengthscale, rbf.variance, x, x_prime);
}

// Entrywise Gram matrix; symmetric by construction (upper triangle mirrored).
inline MatrixXd gram(const KernelParams& params, const VectorXd& xs) {
  const Index n = xs.size();
  MatrixXd k(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      k(i, j) = eval_kernel(params, xs[i], xs[j]);
      k(j, i) = k(i, j);
    }
  }
  return k;
}

// The HMK configuration used throughout the examples: conjugate frequencies
// +-2pi and B = [[2, i/2], [-i/2, 2]]; real kernel, complex spectral density.
inline HarmonizableMixture hmk_reference_config(double a = 1.0) {
  HarmonizableMixture hmk;
  hmk.a = a;
  hmk.etas.resize(2);
  hmk.etas << 2.0 * kPi, -2.0 * kPi;
  hmk.amplitude.resize(2, 2);
  hmk.amplitude(0, 0) = 2.0;
  hmk.amplitude(0, 1) = Complex(0.0, 0.5);
  hmk.amplitude(1, 0) = Complex(0.0, -0.5);
  hmk.amplitude(1, 1) = 2.0;
  return hmk;
}

}  // namespace rnff

#endif  // RNFF_KERNELS_HPP
