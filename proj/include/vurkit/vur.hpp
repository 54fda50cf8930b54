#ifndef VURKIT_VUR_HPP
#define VURKIT_VUR_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>
#include <vector>

#include "vurkit/core/measurement.hpp"
#include "vurkit/entropic.hpp"
#include "vurkit/golden_section.hpp"

namespace vurkit {

/// Width parameter of the Gaussian weights; strictly positive and finite.
class Alpha {
public:
  explicit Alpha(double value) : value_(value) {
    if (!std::isfinite(value) || !(value > 0.0)) {
      std::ostringstream os;
      os << "alpha must be positive and finite, got " << value;
      throw DomainError(os.str());
    }
  }
  double value() const noexcept { return value_; }

private:
  double value_;
};

/// sum_k exp(-alpha (a_k - beta)^2)
inline double gaussian_sum(std::span<const double> eigenvalues, Alpha alpha, double beta) {
  if (eigenvalues.empty()) throw DomainError("gaussian_sum: empty eigenvalue list");
  double s = 0.0;
  for (double a : eigenvalues) s += std::exp(-alpha.value() * (a - beta) * (a - beta));
  return s;
}

/// Maximum of gaussian_sum over beta in [a_1, a_n].
struct InnerMaxResult {
  double beta_star = 0.0;
  double value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

/// Global maximum of the Gaussian sum over the eigenvalue interval.
///
/// The sum has at most n local maxima. A uniform scan with max(256, 64 n) points,
/// merged with the eigenvalues themselves, locates every sampled local maximum; each
/// one is refined by golden-section search between its neighbouring samples.
inline InnerMaxResult inner_max(std::span<const double> eigenvalues, Alpha alpha) {
  if (eigenvalues.empty()) throw DomainError("inner_max: empty eigenvalue list");
  if (!std::is_sorted(eigenvalues.begin(), eigenvalues.end()))
    throw DomainError("inner_max: eigenvalues must be ascending");
  const double lo = eigenvalues.front(), hi = eigenvalues.back();
  const auto f = [&](double beta) { return gaussian_sum(eigenvalues, alpha, beta); };

  InnerMaxResult r{lo, f(lo), lo, hi};
  if (!(hi > lo)) return r;

  const std::size_t n = eigenvalues.size();
  const std::size_t points = std::max<std::size_t>(256, 64 * n);
  std::vector<double> xs;
  xs.reserve(points + n);
  for (std::size_t i = 0; i < points; ++i)
    xs.push_back(i + 1 == points ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1));
  xs.insert(xs.end(), eigenvalues.begin(), eigenvalues.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<double> fs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) fs[i] = f(xs[i]);

  for (std::size_t i = 0; i < xs.size(); ++i) {
    const bool left_ok = i == 0 || fs[i] >= fs[i - 1];
    const bool right_ok = i + 1 == xs.size() || fs[i] >= fs[i + 1];
    if (fs[i] > r.value) {
      r.value = fs[i];
      r.beta_star = xs[i];
    }
    if (!(left_ok && right_ok)) continue;
    const double a = xs[i == 0 ? 0 : i - 1];
    const double b = xs[i + 1 == xs.size() ? i : i + 1];
    const ScalarMax m = golden_section_maximize(f, a, b);
    if (m.value > r.value) {
      r.value = m.value;
      r.beta_star = m.x;
    }
  }
  return r;
}

inline InnerMaxResult inner_max(const SpectralObservable& obs, Alpha alpha) {
  return inner_max(std::span<const double>(obs.eigenvalues()), alpha);
}

/// Single-observable variance lower bound on a given state:
/// (H(A) - ln sum_k exp(-alpha (a_k - <A>)^2)) / alpha.
inline double lemma_bound(const SpectralObservable& obs, const QuantumState& st, Alpha alpha) {
  const double h = measurement_entropy(obs, st);
  const double mu = expectation(obs, st);
  return (h - std::log(gaussian_sum(obs.eigenvalues(), alpha, mu))) / alpha.value();
}

/// State-dependent bound: (C - sum_l ln sum_k exp(-alpha (a^l_k - <A^l>)^2)) / alpha.
/// Not clamped; may be negative.
inline double state_dependent_bound(const std::vector<SpectralObservable>& obs, const QuantumState& st,
                                    Alpha alpha, const EntropicConstant& c) {
  if (obs.empty()) throw DomainError("state_dependent_bound: no observables");
  double s = c.value();
  for (const auto& o : obs) {
    detail::require_match(o, st, "state_dependent_bound");
    s -= std::log(gaussian_sum(o.eigenvalues(), alpha, expectation(o, st)));
  }
  return s / alpha.value();
}

struct BoundReport {
  Alpha alpha{1.0};
  EntropicConstant constant{0.0, EntropicSource::UserSupplied};
  std::vector<InnerMaxResult> per_operator;
  double raw = 0.0;          ///< (1/alpha)(C - sum_l ln M_l)
  double lower_bound = 0.0;  ///< max(0, raw)
  bool clamped = false;
};

/// State-independent bound on sum_l V(A^l) at a fixed alpha.
inline BoundReport bound_at_alpha(const std::vector<SpectralObservable>& obs, Alpha alpha, const EntropicConstant& c) {
  if (obs.empty()) throw DomainError("bound_at_alpha: no observables");
  BoundReport rep{alpha, c, {}, 0.0, 0.0, false};
  double s = c.value();
  rep.per_operator.reserve(obs.size());
  for (const auto& o : obs) {
    rep.per_operator.push_back(inner_max(o, alpha));
    s -= std::log(rep.per_operator.back().value);
  }
  rep.raw = s / alpha.value() + 0.0;  // no -0 in reports
  rep.clamped = rep.raw < 0.0;
  rep.lower_bound = rep.clamped ? 0.0 : rep.raw;
  return rep;
}

/// Raw bound value only, skipping the report bookkeeping.
inline double raw_bound(const std::vector<SpectralObservable>& obs, Alpha alpha, double c) {
  double s = c;
  for (const auto& o : obs) s -= std::log(inner_max(o, alpha).value);
  return s / alpha.value();
}

/// Range and resolution of the alpha search.
struct AlphaSearch {
  double lo = 1e-3;
  double hi = 1e3;
  int points = 200;
};

/// Bound maximized over alpha: log-spaced scan, then golden-section refinement in
/// log(alpha) between the neighbours of the best sample.
inline BoundReport optimize_alpha(const std::vector<SpectralObservable>& obs, const EntropicConstant& c,
                                  const AlphaSearch& search = {}) {
  if (obs.empty()) throw DomainError("optimize_alpha: no observables");
  if (!(search.lo > 0.0 && search.hi > search.lo && search.points >= 3))
    throw DomainError("optimize_alpha: invalid search range");
  const double llo = std::log(search.lo), lhi = std::log(search.hi);
  const auto g = [&](double log_alpha) { return raw_bound(obs, Alpha(std::exp(log_alpha)), c.value()); };

  std::vector<double> xs(static_cast<std::size_t>(search.points));
  std::size_t best = 0;
  double best_val = -INFINITY;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(xs.size() - 1);
    const double v = g(xs[i]);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  const double a = xs[best == 0 ? 0 : best - 1];
  const double b = xs[best + 1 == xs.size() ? best : best + 1];
  const ScalarMax m = golden_section_maximize(g, a, b, 1e-12);
  const double log_alpha = m.value > best_val ? m.x : xs[best];
  return bound_at_alpha(obs, Alpha(std::exp(log_alpha)), c);
}

// ---------------------------------------------------------------------------
// Continuous-variable bounds. Observables enter only through the entropy constant.

struct ContinuousBoundQuery {
  double entropy_constant = 0.0;  ///< C with H(A) + H(B) >= C
  std::optional<Alpha> alpha;     ///< closed-form optimum when absent
};

struct ContinuousBound {
  double alpha_used = 0.0;
  double lower_bound = 0.0;
};

/// V(A) + V(B) >= (C + ln(alpha/pi)) / alpha; without alpha, uses the maximizer
/// alpha* = pi e^{1-C}, where the bound equals e^{C-1}/pi.
inline ContinuousBound continuous_pair_bound(const ContinuousBoundQuery& q) {
  using std::numbers::pi;
  if (!std::isfinite(q.entropy_constant)) throw DomainError("continuous_pair_bound: C must be finite");
  if (q.alpha) {
    const double a = q.alpha->value();
    return {a, (q.entropy_constant + std::log(a / pi)) / a};
  }
  const double a = pi * std::exp(1.0 - q.entropy_constant);
  return {a, std::exp(q.entropy_constant - 1.0) / pi};
}

/// V >= e^{2H-1} / (2 pi) for a continuous distribution with differential entropy H.
inline double shannon_variance_bound(double entropy) {
  if (!std::isfinite(entropy)) throw DomainError("shannon_variance_bound: entropy must be finite");
  return std::exp(2.0 * entropy - 1.0) / (2.0 * std::numbers::pi);
}

} // namespace vurkit

#endif // VURKIT_VUR_HPP
