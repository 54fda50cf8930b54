#ifndef VURKIT_CORE_OBSERVABLE_HPP
#define VURKIT_CORE_OBSERVABLE_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "vurkit/config.hpp"
#include "vurkit/core/jacobi.hpp"
#include "vurkit/core/matrix.hpp"

namespace vurkit {

/// Hermitian operator held in spectral form: ascending eigenvalues with an
/// orthonormal set of eigenvectors (column i of eigenvectors() pairs with eigenvalues()[i]).
///
/// Within a degenerate eigenvalue cluster the choice of basis is whatever the
/// eigensolver produced; downstream quantities only depend on the stored vectors.
class SpectralObservable {
public:
  /// Builds from spectral data. Pairs are sorted into ascending eigenvalue order;
  /// the columns must be orthonormal.
  SpectralObservable(std::vector<double> eigenvalues, ComplexMatrix eigenvectors,
                     const Tolerances& tol = default_tolerances())
      : values_(std::move(eigenvalues)), vectors_(std::move(eigenvectors)) {
    const std::size_t n = values_.size();
    if (n == 0) throw DimensionError("SpectralObservable: empty spectrum");
    if (vectors_.dim() != n)
      throw DimensionError("SpectralObservable: " + std::to_string(n) + " eigenvalues but " +
                           std::to_string(vectors_.dim()) + "-dimensional eigenvectors");
    for (double a : values_)
      if (!std::isfinite(a)) throw DomainError("SpectralObservable: non-finite eigenvalue");
    if (!std::is_sorted(values_.begin(), values_.end())) sort_pairs();
    const double dev = orthonormality_defect();
    if (dev > tol.orthonormality) {
      std::ostringstream os;
      os << "SpectralObservable: eigenvectors not orthonormal (defect " << dev << ")";
      throw DomainError(os.str());
    }
  }

  /// Diagonalizes a Hermitian matrix.
  static SpectralObservable from_matrix(const ComplexMatrix& m,
                                        const Tolerances& tol = default_tolerances()) {
    if (m.dim() == 0) throw DimensionError("eigendecompose: empty matrix");
    const double asym = max_asymmetry(m);
    if (asym > tol.hermiticity) {
      std::ostringstream os;
      os << "eigendecompose: matrix is not Hermitian (max |m_ij - conj(m_ji)| = " << asym << ")";
      throw NotHermitianError(os.str(), asym);
    }
    HermitianEigensystem es = jacobi_eigensystem(m);
    return SpectralObservable(std::move(es.values), std::move(es.vectors), tol);
  }

  std::size_t dim() const noexcept { return values_.size(); }
  const std::vector<double>& eigenvalues() const noexcept { return values_; }
  const ComplexMatrix& eigenvectors() const noexcept { return vectors_; }
  ComplexVector eigenvector(std::size_t i) const { return vectors_.column(i); }

  double min_eigenvalue() const { return values_.front(); }
  double max_eigenvalue() const { return values_.back(); }

  /// sum_i a_i |v_i><v_i|
  ComplexMatrix matrix() const { return spectral_sum([](double a) { return a; }); }

  /// sum_i f(a_i) |v_i><v_i|
  template <typename F>
  ComplexMatrix spectral_sum(F&& f) const {
    const std::size_t n = dim();
    ComplexMatrix r(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double w = f(values_[k]);
      if (w == 0.0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const complex vi = w * vectors_(i, k);
        for (std::size_t j = 0; j < n; ++j) r(i, j) += vi * std::conj(vectors_(j, k));
      }
    }
    return r;
  }

  /// max |<v_i|v_j> - delta_ij|
  double orthonormality_defect() const {
    const std::size_t n = dim();
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        complex s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += std::conj(vectors_(k, i)) * vectors_(k, j);
        d = std::max(d, std::abs(s - (i == j ? 1.0 : 0.0)));
      }
    return d;
  }

  friend bool operator==(const SpectralObservable&, const SpectralObservable&) = default;

private:
  void sort_pairs() {
    const std::size_t n = dim();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return values_[i] < values_[j]; });
    std::vector<double> vals(n);
    ComplexMatrix vecs(n);
    for (std::size_t k = 0; k < n; ++k) {
      vals[k] = values_[order[k]];
      for (std::size_t i = 0; i < n; ++i) vecs(i, k) = vectors_(i, order[k]);
    }
    values_ = std::move(vals);
    vectors_ = std::move(vecs);
  }

  std::vector<double> values_;
  ComplexMatrix vectors_;
};

inline SpectralObservable eigendecompose(const ComplexMatrix& m,
                                         const Tolerances& tol = default_tolerances()) {
  return SpectralObservable::from_matrix(m, tol);
}

inline void require_same_dim(const std::vector<SpectralObservable>& obs, const char* where) {
  for (const auto& o : obs)
    if (o.dim() != obs.front().dim())
      throw DimensionError(std::string(where) + ": observables have different dimensions");
}

} // namespace vurkit

#endif // VURKIT_CORE_OBSERVABLE_HPP
