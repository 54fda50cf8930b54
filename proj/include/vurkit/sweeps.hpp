#ifndef VURKIT_SWEEPS_HPP
#define VURKIT_SWEEPS_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "vurkit/entropic.hpp"
#include "vurkit/random.hpp"
#include "vurkit/vur.hpp"

namespace vurkit {

/// One random (observable, state, alpha) draw used by the property sweeps.
struct RandomTriple {
  SpectralObservable observable;
  QuantumState state;
  Alpha alpha;
};

/// Draws the triple for sample `index`: dimension uniform over `dims`, a random
/// Hermitian observable, a Haar state and alpha log-uniform in [1e-2, 1e2].
/// The generator is left positioned after the triple so callers may keep drawing.
inline RandomTriple sample_triple(Rng& rng, std::span<const std::size_t> dims) {
  if (dims.empty()) throw DomainError("sample_triple: no dimensions given");
  std::uniform_int_distribution<std::size_t> pick(0, dims.size() - 1);
  const std::size_t n = dims[pick(rng)];
  SpectralObservable obs = eigendecompose(sample_random_hermitian(n, rng));
  QuantumState st = sample_random_pure(n, rng);
  const Alpha alpha(sample_log_uniform(1e-2, 1e2, rng));
  return {std::move(obs), std::move(st), alpha};
}

struct LemmaSweepReport {
  std::size_t samples = 0;
  std::size_t violations = 0;     ///< samples with V(A) - bound < -tolerance
  double tolerance = 1e-9;
  double worst_slack = std::numeric_limits<double>::infinity();  ///< min over samples of V(A) - bound
  std::size_t worst_index = 0;
  std::vector<double> worst_eigenvalues;
  ComplexVector worst_state;
  double worst_alpha = 0.0;
};

/// Evaluates V(A) >= (H(A) - ln sum_k exp(-alpha (a_k - <A>)^2)) / alpha on random triples.
inline LemmaSweepReport lemma_sweep(std::size_t n_samples, const std::vector<std::size_t>& dims, std::uint64_t seed,
                                    double tolerance = 1e-9) {
  if (n_samples == 0) throw DomainError("lemma_sweep: need at least one sample");
  LemmaSweepReport rep;
  rep.samples = n_samples;
  rep.tolerance = tolerance;
  for (std::size_t i = 0; i < n_samples; ++i) {
    Rng rng = derive_rng(seed, i);
    const RandomTriple t = sample_triple(rng, dims);
    const double slack = variance(t.observable, t.state) - lemma_bound(t.observable, t.state, t.alpha);
    if (slack < -tolerance) ++rep.violations;
    if (slack < rep.worst_slack) {
      rep.worst_slack = slack;
      rep.worst_index = i;
      rep.worst_eigenvalues = t.observable.eigenvalues();
      rep.worst_state = t.state.amplitudes();
      rep.worst_alpha = t.alpha.value();
    }
  }
  return rep;
}

struct ChainSweepReport {
  std::size_t samples = 0;
  std::size_t violations = 0;  ///< state-dependent value below the state-independent raw value
  std::size_t strict = 0;      ///< gap above 1e-12
  double min_gap = std::numeric_limits<double>::infinity();
  double min_variance_slack = std::numeric_limits<double>::infinity();  ///< min of V(A)+V(B) - state-dependent value
};

/// Extends each sweep triple with a second random observable B and compares, at the
/// same alpha and C = best_entropic_constant({A, B}), the state-dependent bound against
/// the raw state-independent bound. The former can never be smaller.
inline ChainSweepReport chain_sweep(std::size_t n_samples, const std::vector<std::size_t>& dims, std::uint64_t seed,
                                    double tolerance = 1e-12) {
  if (n_samples == 0) throw DomainError("chain_sweep: need at least one sample");
  ChainSweepReport rep;
  rep.samples = n_samples;
  for (std::size_t i = 0; i < n_samples; ++i) {
    Rng rng = derive_rng(seed, i);
    RandomTriple t = sample_triple(rng, dims);
    SpectralObservable b = eigendecompose(sample_random_hermitian(t.observable.dim(), rng));
    const std::vector<SpectralObservable> pair{std::move(t.observable), std::move(b)};
    const EntropicConstant c = best_entropic_constant(pair);
    const double dependent = state_dependent_bound(pair, t.state, t.alpha, c);
    const double independent = bound_at_alpha(pair, t.alpha, c).raw;
    const double gap = dependent - independent;
    if (gap < -tolerance) ++rep.violations;
    if (gap > 1e-12) ++rep.strict;
    rep.min_gap = std::min(rep.min_gap, gap);
    rep.min_variance_slack = std::min(rep.min_variance_slack, variance_sum(pair, t.state) - dependent);
  }
  return rep;
}

} // namespace vurkit

#endif // VURKIT_SWEEPS_HPP
