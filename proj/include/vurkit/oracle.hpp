#ifndef VURKIT_ORACLE_HPP
#define VURKIT_ORACLE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "vurkit/core/measurement.hpp"
#include "vurkit/parallel.hpp"
#include "vurkit/random.hpp"

namespace vurkit {

struct OracleConfig {
  int restarts = 64;
  int max_iters = 2000;
  double step_tol = 1e-12;
  std::uint64_t seed = 0;
};

struct OracleResult {
  double minimum = 0.0;
  QuantumState argmin_state = QuantumState::pure({1.0});
  int restarts_agreeing = 0;  ///< restarts whose final value is within 1e-6 of minimum
  int restarts = 0;
  int best_restart = 0;
};

/// Sum of variances as a smooth function of an unnormalized amplitude vector,
///   F(psi) = sum_l <psi|A_l^2|psi> - <psi|A_l|psi>^2,
/// which coincides with sum_l V(A_l) on the unit sphere.
class VarianceSumObjective {
public:
  explicit VarianceSumObjective(const std::vector<SpectralObservable>& obs) {
    if (obs.empty()) throw DomainError("variance-sum objective: no observables");
    require_same_dim(obs, "variance-sum objective");
    dim_ = obs.front().dim();
    for (const auto& o : obs) {
      ops_.push_back(o.matrix());
      squares_.push_back(o.spectral_sum([](double a) { return a * a; }));
    }
  }

  std::size_t dim() const noexcept { return dim_; }

  double value(std::span<const complex> psi) const {
    double f = 0.0;
    for (std::size_t l = 0; l < ops_.size(); ++l) {
      const double m = std::real(inner(psi, ops_[l] * psi));
      f += std::real(inner(psi, squares_[l] * psi)) - m * m;
    }
    return f;
  }

  /// Ambient gradient packed as complex: component k holds (dF/dRe psi_k, dF/dIm psi_k).
  ComplexVector gradient(std::span<const complex> psi) const {
    ComplexVector g(psi.size());
    for (std::size_t l = 0; l < ops_.size(); ++l) {
      const ComplexVector ap = ops_[l] * psi;
      const ComplexVector a2p = squares_[l] * psi;
      const double m = std::real(inner(psi, ap));
      for (std::size_t k = 0; k < g.size(); ++k) g[k] += 2.0 * a2p[k] - 4.0 * m * ap[k];
    }
    return g;
  }

private:
  std::size_t dim_ = 0;
  std::vector<ComplexMatrix> ops_;
  std::vector<ComplexMatrix> squares_;
};

struct DescentResult {
  ComplexVector psi;
  double value = 0.0;
  int iterations = 0;
};

/// Projected gradient descent on the unit sphere with Armijo backtracking; each
/// accepted step is renormalized and never increases the objective.
inline DescentResult sphere_descent(const VarianceSumObjective& f, ComplexVector psi, const OracleConfig& cfg) {
  DescentResult r{std::move(psi), 0.0, 0};
  r.value = f.value(r.psi);
  double step = 0.1;
  for (; r.iterations < cfg.max_iters; ++r.iterations) {
    ComplexVector g = f.gradient(r.psi);
    const double radial = std::real(inner(r.psi, g));
    double gnorm2 = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
      g[k] -= radial * r.psi[k];
      gnorm2 += std::norm(g[k]);
    }
    if (gnorm2 < 1e-24) break;

    bool accepted = false;
    ComplexVector trial(r.psi.size());
    for (step = std::min(1.0, 4.0 * step); step > 1e-16; step *= 0.5) {
      for (std::size_t k = 0; k < trial.size(); ++k) trial[k] = r.psi[k] - step * g[k];
      const double nrm = norm(trial);
      for (auto& x : trial) x /= nrm;
      const double v = f.value(trial);
      if (v <= r.value - 1e-4 * step * gnorm2) {
        accepted = true;
        const double decrease = r.value - v;
        r.psi.swap(trial);
        r.value = v;
        if (decrease <= cfg.step_tol * std::max(1.0, std::abs(v))) return r;
        break;
      }
    }
    if (!accepted) break;
  }
  return r;
}

/// Minimum of sum_l V(A_l) over pure states, by multi-start descent from Haar-random
/// starting points. Restart i draws from stream i of cfg.seed; the merged result takes
/// the lowest value with ties broken by restart index, so it is independent of `threads`.
inline OracleResult minimize_variance_sum(const std::vector<SpectralObservable>& obs, const OracleConfig& cfg = {},
                                          unsigned threads = configured_threads()) {
  if (cfg.restarts < 1 || cfg.max_iters < 1 || !(cfg.step_tol > 0.0))
    throw DomainError("minimize_variance_sum: restarts, max_iters and step_tol must be positive");
  const VarianceSumObjective f(obs);
  const std::size_t n = f.dim();

  std::vector<ComplexVector> finals(static_cast<std::size_t>(cfg.restarts));
  std::vector<double> values(finals.size());
  parallel_for(finals.size(), threads, [&](std::size_t i) {
    Rng rng = derive_rng(cfg.seed, i);
    const QuantumState start = sample_random_pure(n, rng);
    DescentResult d = sphere_descent(f, start.amplitudes(), cfg);
    fix_phase(d.psi);
    const QuantumState st = QuantumState::pure_normalized(std::move(d.psi));
    values[i] = variance_sum(obs, st);
    finals[i] = st.amplitudes();
  });

  OracleResult out;
  out.restarts = cfg.restarts;
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[best]) best = i;
  out.best_restart = static_cast<int>(best);
  out.minimum = std::max(0.0, values[best]);
  out.argmin_state = QuantumState::pure(finals[best]);
  for (double v : values)
    if (v - values[best] <= 1e-6) ++out.restarts_agreeing;
  return out;
}

} // namespace vurkit

#endif // VURKIT_ORACLE_HPP
