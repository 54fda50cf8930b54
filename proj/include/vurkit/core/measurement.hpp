#ifndef VURKIT_CORE_MEASUREMENT_HPP
#define VURKIT_CORE_MEASUREMENT_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "vurkit/config.hpp"
#include "vurkit/core/observable.hpp"
#include "vurkit/core/state.hpp"

namespace vurkit {

namespace detail {
inline void require_match(const SpectralObservable& obs, const QuantumState& st, const char* where) {
  if (obs.dim() != st.dim())
    throw DimensionError(std::string(where) + ": observable dimension " + std::to_string(obs.dim()) +
                         " vs state dimension " + std::to_string(st.dim()));
}
} // namespace detail

/// Born probabilities p_i = <a_i|rho|a_i>, in ascending-eigenvalue order.
inline std::vector<double> measurement_distribution(const SpectralObservable& obs, const QuantumState& st) {
  detail::require_match(obs, st, "measurement_distribution");
  std::vector<double> p(obs.dim());
  for (std::size_t i = 0; i < obs.dim(); ++i)
    p[i] = std::max(0.0, st.weight(obs.eigenvector(i)));
  return p;
}

inline double expectation(const SpectralObservable& obs, const QuantumState& st) {
  const auto p = measurement_distribution(obs, st);
  const auto& a = obs.eigenvalues();
  double mu = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) mu += p[i] * a[i];
  return std::clamp(mu, a.front(), a.back());
}

/// Central second moment of the measurement distribution.
inline double variance(const SpectralObservable& obs, const QuantumState& st) {
  const auto p = measurement_distribution(obs, st);
  const auto& a = obs.eigenvalues();
  double mu = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) mu += p[i] * a[i];
  double v = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) v += p[i] * (a[i] - mu) * (a[i] - mu);
  return v;
}

/// Sum of variances of several observables on one state.
inline double variance_sum(const std::vector<SpectralObservable>& obs, const QuantumState& st) {
  double s = 0.0;
  for (const auto& o : obs) s += variance(o, st);
  return s;
}

/// Shannon entropy in nats; 0 ln 0 = 0.
inline double shannon_entropy(std::span<const double> p, double tol = 1e-8) {
  if (p.empty()) throw DomainError("shannon_entropy: empty distribution");
  double total = 0.0;
  for (double x : p) {
    if (!(x >= -tol)) throw DomainError("shannon_entropy: negative or NaN probability");
    total += x;
  }
  if (std::abs(total - 1.0) > tol) {
    std::ostringstream os;
    os << "shannon_entropy: probabilities sum to " << total;
    throw DomainError(os.str());
  }
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log(x);
  return h;
}

/// Entropy of the measurement distribution of `obs` on `st`.
inline double measurement_entropy(const SpectralObservable& obs, const QuantumState& st) {
  return shannon_entropy(measurement_distribution(obs, st));
}

/// |<a_i|b_j>| for two eigenbases, plus its maximum c.
struct OverlapStats {
  double c = 0.0;
  std::vector<std::vector<double>> overlap;  ///< overlap[i][j] = |<a_i|b_j>|
};

inline OverlapStats overlap_stats(const SpectralObservable& a, const SpectralObservable& b) {
  if (a.dim() != b.dim()) throw DimensionError("overlap_stats: dimension mismatch");
  const std::size_t n = a.dim();
  OverlapStats s;
  s.overlap.assign(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto ai = a.eigenvector(i);
    for (std::size_t j = 0; j < n; ++j) {
      const double o = std::abs(inner(ai, b.eigenvector(j)));
      s.overlap[i][j] = o;
      s.c = std::max(s.c, o);
    }
  }
  return s;
}

/// True iff every pairwise overlap lies within tol of 1/sqrt(n).
inline bool is_mub(const std::vector<SpectralObservable>& bases, double tol = 1e-8) {
  if (bases.size() < 2) throw DomainError("is_mub: need at least two bases");
  require_same_dim(bases, "is_mub");
  const double target = 1.0 / std::sqrt(static_cast<double>(bases.front().dim()));
  for (std::size_t k = 0; k < bases.size(); ++k)
    for (std::size_t l = k + 1; l < bases.size(); ++l) {
      const auto s = overlap_stats(bases[k], bases[l]);
      for (const auto& row : s.overlap)
        for (double o : row)
          if (std::abs(o - target) > tol) return false;
    }
  return true;
}

/// Right-hand side of the Robertson relation, |<[A,B]>| / 2.
inline double robertson_bound(const SpectralObservable& a, const SpectralObservable& b, const QuantumState& st) {
  if (a.dim() != b.dim()) throw DimensionError("robertson_bound: dimension mismatch");
  detail::require_match(a, st, "robertson_bound");
  const ComplexMatrix ma = a.matrix(), mb = b.matrix();
  return 0.5 * std::abs(st.expect(ma * mb - mb * ma));
}

} // namespace vurkit

#endif // VURKIT_CORE_MEASUREMENT_HPP
