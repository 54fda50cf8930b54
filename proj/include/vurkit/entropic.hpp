#ifndef VURKIT_ENTROPIC_HPP
#define VURKIT_ENTROPIC_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "vurkit/core/measurement.hpp"

namespace vurkit {

enum class EntropicSource { MaassenUffink, DeVicenteAnalytic, WuMub, WuFullMub, PairwiseMatching, UserSupplied };

inline std::string_view to_string(EntropicSource s) {
  switch (s) {
    case EntropicSource::MaassenUffink: return "MaassenUffink";
    case EntropicSource::DeVicenteAnalytic: return "DeVicenteAnalytic";
    case EntropicSource::WuMub: return "WuMub";
    case EntropicSource::WuFullMub: return "WuFullMub";
    case EntropicSource::PairwiseMatching: return "PairwiseMatching";
    case EntropicSource::UserSupplied: return "UserSupplied";
  }
  return "?";
}

/// What an entropic constant was computed from. Zero means "not specified".
struct EntropicInputs {
  int observables = 0;             ///< m
  int dimension = 0;               ///< n
  std::optional<double> overlap;   ///< c, for pair bounds
  bool mub = false;

  std::string describe() const {
    std::ostringstream os;
    os << "m=" << observables << " n=" << dimension;
    if (overlap) os << " c=" << *overlap;
    if (mub) os << " mub";
    return os.str();
  }
};

/// A state-independent lower bound C on a sum of measurement entropies (nats).
class EntropicConstant {
public:
  EntropicConstant(double value, EntropicSource source, EntropicInputs inputs = {})
      : value_(value), source_(source), inputs_(std::move(inputs)) {
    if (!std::isfinite(value_) || value_ < 0.0) {
      std::ostringstream os;
      os << "entropic constant must be finite and nonnegative, got " << value_;
      throw DomainError(os.str());
    }
    if (inputs_.observables > 0 && inputs_.dimension > 0) {
      const double cap = inputs_.observables * std::log(static_cast<double>(inputs_.dimension));
      if (value_ > cap * (1.0 + 1e-12) + 1e-12) {
        std::ostringstream os;
        os << "entropic constant " << value_ << " exceeds m ln n = " << cap;
        throw DomainError(os.str());
      }
    }
  }

  double value() const noexcept { return value_; }
  EntropicSource source() const noexcept { return source_; }
  const EntropicInputs& inputs() const noexcept { return inputs_; }

private:
  double value_;
  EntropicSource source_;
  EntropicInputs inputs_;
};

/// A C value supplied by the caller; m and n (when given) enable the m ln n sanity cap.
inline EntropicConstant user_constant(double value, int m = 0, int n = 0) {
  return EntropicConstant(value, EntropicSource::UserSupplied, {m, n, std::nullopt, false});
}

/// -2 ln c
inline EntropicConstant maassen_uffink(double c) {
  if (!(c > 0.0 && c <= 1.0)) throw DomainError("maassen_uffink: overlap c must lie in (0, 1]");
  return EntropicConstant(c == 1.0 ? 0.0 : -2.0 * std::log(c), EntropicSource::MaassenUffink,
                          {2, 0, c, false});
}

/// Lower edge of the overlap range on which the binary-entropy pair bound is enabled.
inline constexpr double kDeVicenteThreshold = 0.834;

enum class DeVicenteRegime {
  Restricted,  ///< c >= kDeVicenteThreshold
  Literal,     ///< c >= 1/sqrt 2; not a valid bound on the whole range, study use only
};

/// -(1+c) ln((1+c)/2) - (1-c) ln((1-c)/2)
///
/// At c = 1/sqrt 2 this gives 0.833 although |0> measured in the sigma_z / sigma_x
/// bases has an entropy sum of ln 2, so the default regime starts at 0.834.
inline EntropicConstant de_vicente_analytic(double c, DeVicenteRegime regime = DeVicenteRegime::Restricted) {
  const double lo = regime == DeVicenteRegime::Restricted ? kDeVicenteThreshold : 1.0 / std::sqrt(2.0);
  if (!(c <= 1.0)) throw DomainError("de_vicente_analytic: overlap c must not exceed 1");
  if (!(c >= lo - 1e-15)) {
    std::ostringstream os;
    os << "de_vicente_analytic: c = " << c << " is below the enabled regime c >= " << lo;
    throw DomainError(os.str());
  }
  double v = -(1.0 + c) * std::log((1.0 + c) / 2.0);
  if (c < 1.0) v -= (1.0 - c) * std::log((1.0 - c) / 2.0);
  return EntropicConstant(std::max(0.0, v), EntropicSource::DeVicenteAnalytic, {2, 0, c, false});
}

/// Bound for m mutually unbiased bases in dimension n:
/// m ln K + (K+1)(m - K(n+m-1)/n) ln(1 + 1/K), K = floor(mn/(n+m-1)).
inline EntropicConstant wu_mub_bound(int m, int n) {
  if (m < 2 || n < 2) throw DomainError("wu_mub_bound: need m >= 2 and n >= 2");
  if (m > n + 1) throw DomainError("wu_mub_bound: at most n+1 mutually unbiased bases exist");
  const long long denom = static_cast<long long>(n) + m - 1;
  const long long k = static_cast<long long>(m) * n / denom;
  // (m - K(n+m-1)/n) = (mn - K(n+m-1)) / n, numerator exact in integers
  const long long num = static_cast<long long>(m) * n - k * denom;
  const double kd = static_cast<double>(k);
  double v = m * std::log(kd);
  if (num != 0) v += (kd + 1.0) * (static_cast<double>(num) / n) * std::log1p(1.0 / kd);
  return EntropicConstant(v, EntropicSource::WuMub, {m, n, std::nullopt, true});
}

/// Complete set of n+1 MUBs: [(n+1)/2] ln [(n+1)/2] + [(n+2)/2] ln [(n+2)/2].
inline EntropicConstant wu_full_mub(int n) {
  if (n < 2) throw DomainError("wu_full_mub: need n >= 2");
  const double f1 = static_cast<double>((n + 1) / 2);
  const double f2 = static_cast<double>((n + 2) / 2);
  return EntropicConstant(f1 * std::log(f1) + f2 * std::log(f2), EntropicSource::WuFullMub,
                          {n + 1, n, std::nullopt, true});
}

/// Strongest constant the built-in calculators can certify for an observable set.
///
/// Two observables: max of the Maassen-Uffink and (when enabled) binary-entropy bounds.
/// More than two, mutually unbiased: the MUB bound. Otherwise observables are greedily
/// paired by largest -2 ln c and the pair bounds summed; entropies are nonnegative, so
/// leaving an observable unmatched only weakens the bound.
inline EntropicConstant best_entropic_constant(const std::vector<SpectralObservable>& obs, double mub_tol = 1e-8) {
  if (obs.size() < 2) throw DomainError("best_entropic_constant: need at least two observables");
  require_same_dim(obs, "best_entropic_constant");
  const int m = static_cast<int>(obs.size());
  const int n = static_cast<int>(obs.front().dim());

  if (m == 2) {
    const double c = std::min(1.0, overlap_stats(obs[0], obs[1]).c);
    EntropicConstant best = maassen_uffink(c);
    if (c >= kDeVicenteThreshold) {
      auto dv = de_vicente_analytic(c);
      if (dv.value() > best.value()) best = dv;
    }
    return EntropicConstant(best.value(), best.source(), {2, n, c, false});
  }

  if (m <= n + 1 && is_mub(obs, mub_tol)) return wu_mub_bound(m, n);

  struct Edge {
    double score;
    std::size_t i, j;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < obs.size(); ++i)
    for (std::size_t j = i + 1; j < obs.size(); ++j) {
      const double c = std::min(1.0, overlap_stats(obs[i], obs[j]).c);
      edges.push_back({maassen_uffink(c).value(), i, j});
    }
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.score > b.score; });
  std::vector<bool> used(obs.size(), false);
  double total = 0.0;
  for (const auto& e : edges) {
    if (used[e.i] || used[e.j]) continue;
    used[e.i] = used[e.j] = true;
    total += e.score;
  }
  return EntropicConstant(total, EntropicSource::PairwiseMatching, {m, n, std::nullopt, false});
}

} // namespace vurkit

#endif // VURKIT_ENTROPIC_HPP
