#ifndef RNFF_SPECTRAL_HPP
#define RNFF_SPECTRAL_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "rnff/grid.hpp"
#include "rnff/linalg.hpp"
#include "rnff/types.hpp"

namespace rnff {

// Locally stationary spectral density
//   s(w, w') = 1/(4 pi a) exp(-wbar^2 / 2a) exp(-wtil^2 / 8a),
// wbar = (w + w')/2, wtil = w - w'. Real, symmetric in its arguments and
// invariant under w' -> -w', so the spectral weights are real-valued.
inline double eval_ls(double a, double omega, double omega_prime) {
  const double mid = 0.5 * (omega + omega_prime);
  const double lag = omega - omega_prime;
  return 1.0 / (4.0 * kPi * a) *
         std::exp(-mid * mid / (2.0 * a)) *
         std::exp(-lag * lag / (8.0 * a));
}

struct LocallyStationary {
  double a = 1.0;
};

// Mixture of frequency-shifted locally stationary bumps with a Hermitian PSD
// amplitude matrix; generally complex-valued off the diagonal.
struct HarmonizableMixture {
  double a = 1.0;
  VectorXd etas;        // Q shift frequencies
  MatrixXcd amplitude;  // Q x Q Hermitian PSD
};

inline Complex eval_hmk(const HarmonizableMixture& params, double omega, double omega_prime) {
  const Index q = params.etas.size();
  Complex sum = 0.0;
  for (Index i = 0; i < q; ++i) {
    for (Index j = 0; j < q; ++j) {
      sum += params.amplitude(i, j) *
             eval_ls(params.a, omega - params.etas[i], omega_prime - params.etas[j]);
    }
  }
  return sum;
}

using SpectralModel = std::variant<LocallyStationary, HarmonizableMixture>;

inline Complex eval_spectral(const SpectralModel& model, double omega, double omega_prime) {
  if (const auto* ls = std::get_if<LocallyStationary>(&model)) {
    return Complex(eval_ls(ls->a, omega, omega_prime), 0.0);
  }
  return eval_hmk(std::get<HarmonizableMixture>(model), omega, omega_prime);
}

// [S]_ij = s(w_i, w_j) on the grid. The result is symmetrized with its
// conjugate transpose before wrapping, killing the floating-point asymmetry
// the downstream factorization would otherwise trip on. Unit scale: the
// Delta-omega^2 weighting is applied by the feature factorization, not here.
template <class Density>
HermitianPsd build_spectral_matrix_from(const FrequencyGrid& grid, Density&& density) {
  const Index m = grid.m;
  MatrixXcd s(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      s(i, j) = density(grid.frequencies[i], grid.frequencies[j]);
    }
  }
  return HermitianPsd(s);
}

inline HermitianPsd build_spectral_matrix(const FrequencyGrid& grid, const SpectralModel& model) {
  return build_spectral_matrix_from(
      grid, [&model](double w, double wp) { return eval_spectral(model, w, wp); });
}

// JSON document: {"model": "ls"|"hmk", "a": ..., "etas": [...],
//                 "B_re": [[...]], "B_im": [[...]]}
inline nlohmann::json spectral_model_to_json(const SpectralModel& model) {
  nlohmann::json j;
  if (const auto* ls = std::get_if<LocallyStationary>(&model)) {
    j["model"] = "ls";
    j["a"] = ls->a;
    return j;
  }
  const auto& hmk = std::get<HarmonizableMixture>(model);
  j["model"] = "hmk";
  j["a"] = hmk.a;
  j["etas"] = std::vector<double>(hmk.etas.begin(), hmk.etas.end());
  const Index q = hmk.etas.size();
  std::vector<std::vector<double>> re(q, std::vector<double>(q));
  std::vector<std::vector<double>> im(q, std::vector<double>(q));
  for (Index i = 0; i < q; ++i) {
    for (Index k = 0; k < q; ++k) {
      re[i][k] = hmk.amplitude(i, k).real();
      im[i][k] = hmk.amplitude(i, k).imag();
    }
  }
  j["B_re"] = re;
  j["B_im"] = im;
  return j;
}

inline SpectralModel spectral_model_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("model").get<std::string>();
  if (kind == "ls") {
    return LocallyStationary{j.at("a").get<double>()};
  }
  if (kind != "hmk") {
    throw std::invalid_argument("spectral model must be \"ls\" or \"hmk\", got \"" + kind + "\"");
  }
  HarmonizableMixture hmk;
  hmk.a = j.at("a").get<double>();
  const auto etas = j.at("etas").get<std::vector<double>>();
  const auto re = j.at("B_re").get<std::vector<std::vector<double>>>();
  const auto im = j.at("B_im").get<std::vector<std::vector<double>>>();
  const Index q = static_cast<Index>(etas.size());
  hmk.etas = Eigen::Map<const VectorXd>(etas.data(), q);
  hmk.amplitude.resize(q, q);
  for (Index i = 0; i < q; ++i) {
    for (Index k = 0; k < q; ++k) {
      hmk.amplitude(i, k) = Complex(re[i][k], im[i][k]);
    }
  }
  return hmk;
}

}  // namespace rnff

#endif  // RNFF_SPECTRAL_HPP
