#ifndef VURKIT_RANDOM_HPP
#define VURKIT_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "vurkit/core/state.hpp"

namespace vurkit {

using Rng = std::mt19937_64;

/// Independent generator for sub-task `stream` of a run seeded with `seed`.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

inline ComplexVector complex_gaussian_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(n);
  for (auto& x : v) {
    const double re = normal(rng);
    const double im = normal(rng);
    x = {re, im};
  }
  return v;
}

/// Haar-random pure state: normalized complex Gaussian vector, phase-fixed so the
/// first component is real and positive.
inline QuantumState sample_random_pure(std::size_t n, Rng& rng) {
  if (n == 0) throw DimensionError("sample_random_pure: dimension must be positive");
  ComplexVector v = complex_gaussian_vector(n, rng);
  const double nrm = norm(v);
  for (auto& x : v) x /= nrm;
  fix_phase(v);
  return QuantumState::pure(std::move(v));
}

/// Random Hermitian matrix (G + G^H)/2 with G complex Gaussian, scaled by `scale`.
inline ComplexMatrix sample_random_hermitian(std::size_t n, Rng& rng, double scale = 1.0) {
  const ComplexVector g = complex_gaussian_vector(n * n, rng);
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = 0.5 * scale * (g[i * n + j] + std::conj(g[j * n + i]));
  return m;
}

/// Uniform on the simplex (Dirichlet with all concentrations 1).
inline std::vector<double> sample_dirichlet(std::size_t k, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(k);
  double s = 0.0;
  for (auto& x : w) s += (x = expo(rng));
  for (auto& x : w) x /= s;
  return w;
}

/// log-uniform draw in [lo, hi]
inline double sample_log_uniform(double lo, double hi, Rng& rng) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

} // namespace vurkit

#endif // VURKIT_RANDOM_HPP
