#ifndef RNFF_RNG_HPP
#define RNFF_RNG_HPP

#include <cmath>
#include <cstdint>

#include "rnff/types.hpp"

namespace rnff {

// SplitMix64 (Steele/Lea/Flood). Chosen over std::mt19937 because the
// algorithm fits in a dozen lines and the stream is identical on every
// platform, so seeded paths stay reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on (0, 1]; never returns 0 so log() below is safe.
  double uniform() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  // Standard normal via Box-Muller on the uniform stream.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * kPi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  VectorXd normal_vector(Index n) {
    VectorXd out(n);
    for (Index i = 0; i < n; ++i) out[i] = normal();
    return out;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

struct RngSeed {
  std::uint64_t seed = 0;
};

}  // namespace rnff

#endif  // RNFF_RNG_HPP
