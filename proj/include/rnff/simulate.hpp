#ifndef RNFF_SIMULATE_HPP
#define RNFF_SIMULATE_HPP

#include "rnff/features.hpp"
#include "rnff/rng.hpp"
#include "rnff/types.hpp"

// Sample paths of the approximated process from the feature factorization.
// Identical (factor, xs, seed) always yields the identical path: the RNG is
// SplitMix64 and normals come from Box-Muller, both documented in rng.hpp.

namespace rnff {

// Circularly symmetric complex Gaussian: E = E_re + i E_im with
// E_re, E_im ~ N(0, I/2), so each entry has unit total variance and zero
// pseudo-variance.
inline VectorXcd sample_circular_gaussian(Index p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const double scale = 1.0 / std::sqrt(2.0);
  VectorXcd e(p);
  for (Index k = 0; k < p; ++k) {
    const double re = rng.normal() * scale;
    const double im = rng.normal() * scale;
    e[k] = Complex(re, im);
  }
  return e;
}

// One path of the process restricted to the given locations.
//
//  - Complex mode: Z = L E with E circular complex; the path is complex.
//  - Real modes:   the spectral weights W = C E are drawn with E ~ N(0, I)
//                  real, matching the real-valued-weights covariance the real
//                  kernels use, and Z = 2 Re[a(x) W] = 2 Re(L) E is real.
inline VectorXcd simulate_path(const FeatureFactor& factor, const VectorXd& xs,
                               std::uint64_t seed, bool strict_aliasing = false) {
  const LowRankKernel lr = build_feature_matrix(xs, factor, strict_aliasing);
  const Index p = lr.L.cols();
  if (factor.mode == FeatureMode::Complex) {
    return lr.L * sample_circular_gaussian(p, seed);
  }
  SplitMix64 rng(seed);
  const VectorXd e = rng.normal_vector(p);
  const VectorXd path = 2.0 * (lr.L.real() * e);
  return path.cast<Complex>();
}

// Real-mode convenience wrapper.
inline VectorXd simulate_path_real(const FeatureFactor& factor, const VectorXd& xs,
                                   std::uint64_t seed, bool strict_aliasing = false) {
  if (factor.mode == FeatureMode::Complex) {
    throw std::invalid_argument("simulate_path_real: factor is in complex mode");
  }
  return simulate_path(factor, xs, seed, strict_aliasing).real();
}

}  // namespace rnff

#endif  // RNFF_SIMULATE_HPP
