#ifndef RNFF_GRID_HPP
#define RNFF_GRID_HPP

#include <stdexcept>

#include "rnff/types.hpp"

namespace rnff {

// Equidistant frequency grid with spacing delta_omega and cutoff omega_max.
//
// Two layouts:
//  - nonnegative: {0, d, 2d, ..., (m-1)d} with d = omega_max / m. The zero
//    frequency is always included and carries the spectral mass at the origin.
//  - symmetric:   {-omega_max + k d : k = 0..m-1} with d = 2 omega_max/(m-1).
//    Contains omega = 0 exactly when m is odd.
//
// The induced kernel approximation is periodic with period 2*pi/delta_omega.
struct FrequencyGrid {
  double omega_max = 0.0;
  Index m = 0;
  double delta_omega = 0.0;
  bool symmetric = false;
  VectorXd frequencies;

  double period() const { return 2.0 * kPi / delta_omega; }

  static FrequencyGrid nonnegative(Index m, double omega_max) {
    if (m < 1 || omega_max <= 0.0) {
      throw std::invalid_argument("FrequencyGrid: need m >= 1 and omega_max > 0");
    }
    FrequencyGrid grid;
    grid.omega_max = omega_max;
    grid.m = m;
    grid.delta_omega = omega_max / static_cast<double>(m);
    grid.symmetric = false;
    grid.frequencies.resize(m);
    for (Index k = 0; k < m; ++k) grid.frequencies[k] = static_cast<double>(k) * grid.delta_omega;
    return grid;
  }

  static FrequencyGrid symmetric_grid(Index m, double omega_max) {
    if (m < 2 || omega_max <= 0.0) {
      throw std::invalid_argument("FrequencyGrid: symmetric grid needs m >= 2 and omega_max > 0");
    }
    FrequencyGrid grid;
    grid.omega_max = omega_max;
    grid.m = m;
    grid.delta_omega = 2.0 * omega_max / static_cast<double>(m - 1);
    grid.symmetric = true;
    grid.frequencies.resize(m);
    for (Index k = 0; k < m; ++k) {
      grid.frequencies[k] = -omega_max + static_cast<double>(k) * grid.delta_omega;
    }
    // Pin the origin exactly for odd m; -omega_max + (m-1)/2 * d accumulates
    // one ulp of noise otherwise and the half-weight test below keys on 0.
    if (m % 2 == 1) grid.frequencies[(m - 1) / 2] = 0.0;
    return grid;
  }
};

// Aliasing condition: the approximation periodizes the kernel, so the input
// domain must satisfy max|x| < pi / delta_omega.
inline bool validate_aliasing(const FrequencyGrid& grid, double x_max) {
  return x_max < kPi / grid.delta_omega;
}

}  // namespace rnff

#endif  // RNFF_GRID_HPP
