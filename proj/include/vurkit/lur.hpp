#ifndef VURKIT_LUR_HPP
#define VURKIT_LUR_HPP

#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vurkit/core/measurement.hpp"
#include "vurkit/entropic.hpp"
#include "vurkit/vur.hpp"

namespace vurkit {

/// Local observables A_i (first subsystem) and B_i (second subsystem).
struct LocalObservablePair {
  SpectralObservable a_side;
  SpectralObservable b_side;
};

inline constexpr std::size_t kMaxLiftedDim = 4096;

/// A (x) I + I (x) B in spectral form: eigenvalues a_j + b_k with eigenvectors
/// |a_j> (x) |b_k>, ascending.
inline SpectralObservable lift_sum(const LocalObservablePair& pair) {
  const std::size_t na = pair.a_side.dim(), nb = pair.b_side.dim();
  if (na * nb > kMaxLiftedDim)
    throw DimensionError("lift_sum: joint dimension " + std::to_string(na * nb) + " exceeds " +
                         std::to_string(kMaxLiftedDim));
  std::vector<double> values;
  values.reserve(na * nb);
  ComplexMatrix vectors(na * nb);
  for (std::size_t j = 0; j < na; ++j) {
    const ComplexVector aj = pair.a_side.eigenvector(j);
    for (std::size_t k = 0; k < nb; ++k) {
      const ComplexVector v = kron(aj, pair.b_side.eigenvector(k));
      const std::size_t col = j * nb + k;
      values.push_back(pair.a_side.eigenvalues()[j] + pair.b_side.eigenvalues()[k]);
      for (std::size_t i = 0; i < v.size(); ++i) vectors(i, col) = v[i];
    }
  }
  return SpectralObservable(std::move(values), std::move(vectors));
}

/// A (x) I + I (x) B as a dense matrix.
inline ComplexMatrix lift_sum_matrix(const LocalObservablePair& pair) {
  return kron(pair.a_side.matrix(), ComplexMatrix::identity(pair.b_side.dim())) +
         kron(ComplexMatrix::identity(pair.a_side.dim()), pair.b_side.matrix());
}

enum class LurVerdict { Entangled, NotDetected };

inline std::string_view to_string(LurVerdict v) {
  return v == LurVerdict::Entangled ? "Entangled" : "NotDetected";
}

struct LurReport {
  double lhs = 0.0;  ///< sum_i V(A_i (x) I + I (x) B_i)
  double u_a = 0.0;
  double u_b = 0.0;
  double margin = 0.0;  ///< lhs - (u_a + u_b)
  LurVerdict verdict = LurVerdict::NotDetected;
  std::optional<BoundReport> bound_a;  ///< present when U_A was derived from C_A
  std::optional<BoundReport> bound_b;
};

inline constexpr double kLurMarginTolerance = 1e-9;

/// Compares the summed joint variances against externally provided U_A, U_B.
/// Separable states satisfy lhs >= U_A + U_B, so a violation certifies entanglement.
inline LurReport lur_test_with_bounds(const std::vector<LocalObservablePair>& pairs, const QuantumState& rho,
                                      double u_a, double u_b) {
  if (pairs.empty()) throw DomainError("lur_test: no observable pairs");
  const std::size_t na = pairs.front().a_side.dim(), nb = pairs.front().b_side.dim();
  for (const auto& p : pairs)
    if (p.a_side.dim() != na || p.b_side.dim() != nb)
      throw DimensionError("lur_test: local observables differ in dimension");
  if (rho.dim() != na * nb)
    throw DimensionError("lur_test: state dimension " + std::to_string(rho.dim()) + " != " +
                         std::to_string(na) + " x " + std::to_string(nb));
  LurReport rep;
  for (const auto& p : pairs) rep.lhs += variance(lift_sum(p), rho);
  rep.u_a = u_a;
  rep.u_b = u_b;
  rep.margin = rep.lhs - (u_a + u_b);
  rep.verdict = rep.margin < -kLurMarginTolerance ? LurVerdict::Entangled : LurVerdict::NotDetected;
  return rep;
}

/// LUR test with U_A, U_B taken from the alpha-optimized state-independent bounds
/// for {A_i} under C_A and {B_i} under C_B.
inline LurReport lur_test(const std::vector<LocalObservablePair>& pairs, const QuantumState& rho,
                          const EntropicConstant& c_a, const EntropicConstant& c_b, const AlphaSearch& search = {}) {
  if (pairs.empty()) throw DomainError("lur_test: no observable pairs");
  std::vector<SpectralObservable> as, bs;
  for (const auto& p : pairs) {
    as.push_back(p.a_side);
    bs.push_back(p.b_side);
  }
  BoundReport ra = optimize_alpha(as, c_a, search);
  BoundReport rb = optimize_alpha(bs, c_b, search);
  LurReport rep = lur_test_with_bounds(pairs, rho, ra.lower_bound, rb.lower_bound);
  rep.bound_a = std::move(ra);
  rep.bound_b = std::move(rb);
  return rep;
}

/// Same pairs with C_A, C_B chosen by best_entropic_constant on each side.
inline LurReport lur_test_auto(const std::vector<LocalObservablePair>& pairs, const QuantumState& rho,
                               const AlphaSearch& search = {}) {
  std::vector<SpectralObservable> as, bs;
  for (const auto& p : pairs) {
    as.push_back(p.a_side);
    bs.push_back(p.b_side);
  }
  if (as.size() < 2) throw DomainError("lur_test: automatic C needs at least two pairs");
  return lur_test(pairs, rho, best_entropic_constant(as), best_entropic_constant(bs), search);
}

} // namespace vurkit

#endif // VURKIT_LUR_HPP
