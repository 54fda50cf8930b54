#ifndef VURKIT_CORE_MATRIX_HPP
#define VURKIT_CORE_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "vurkit/error.hpp"

namespace vurkit {

using complex = std::complex<double>;
using ComplexVector = std::vector<complex>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
  ComplexMatrix() = default;

  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  ComplexMatrix(std::size_t dim, std::vector<complex> entries)
      : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim_ * dim_)
      throw DimensionError("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                           " entries, got " + std::to_string(data_.size()));
    check_finite();
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows)
      : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
      if (row.size() != dim_)
        throw DimensionError("ComplexMatrix: matrix is not square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
    check_finite();
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  std::span<const complex> data() const noexcept { return data_; }

  ComplexVector column(std::size_t j) const {
    ComplexVector v(dim_);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  complex trace() const {
    complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  ComplexMatrix& operator*=(complex s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, complex s) { return a *= s; }
  friend ComplexMatrix operator*(complex s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.require_same_dim(b);
    const std::size_t n = a.dim_;
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const complex aik = a(i, k);
        if (aik == complex{}) continue;
        for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend ComplexVector operator*(const ComplexMatrix& a, std::span<const complex> v) {
    if (v.size() != a.dim_)
      throw DimensionError("matrix-vector product: dimension mismatch");
    ComplexVector r(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
      complex s = 0.0;
      for (std::size_t j = 0; j < a.dim_; ++j) s += a(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
  void require_same_dim(const ComplexMatrix& o) const {
    if (o.dim_ != dim_)
      throw DimensionError("matrix dimensions differ: " + std::to_string(dim_) + " vs " +
                           std::to_string(o.dim_));
  }

  void check_finite() const {
    for (const auto& x : data_)
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
        throw DomainError("ComplexMatrix: non-finite entry");
  }

  std::size_t dim_ = 0;
  std::vector<complex> data_;
};

/// <u|v> (antilinear in the first argument).
inline complex inner(std::span<const complex> u, std::span<const complex> v) {
  if (u.size() != v.size()) throw DimensionError("inner product: dimension mismatch");
  complex s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

inline double norm(std::span<const complex> v) { return std::sqrt(std::real(inner(v, v))); }

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("max_abs_diff: dimension mismatch");
  double d = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    d = std::max(d, std::abs(a.data()[k] - b.data()[k]));
  return d;
}

inline double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& x : m.data()) s += std::norm(x);
  return std::sqrt(s);
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix r(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return r;
}

inline ComplexVector kron(std::span<const complex> u, std::span<const complex> v) {
  ComplexVector r;
  r.reserve(u.size() * v.size());
  for (const auto& x : u)
    for (const auto& y : v) r.push_back(x * y);
  return r;
}

/// |v><v|
inline ComplexMatrix outer(std::span<const complex> v) {
  ComplexMatrix r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r(i, j) = v[i] * std::conj(v[j]);
  return r;
}

/// Largest |m_ij - conj(m_ji)|.
inline double max_asymmetry(const ComplexMatrix& m) {
  double d = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

inline bool validate_hermitian(const ComplexMatrix& m, double tol = 1e-10) {
  return max_asymmetry(m) <= tol;
}

/// Multiplies v by a unit phase so that its first component with modulus above
/// `cutoff` becomes real and positive.
inline void fix_phase(std::span<complex> v, double cutoff = 1e-12) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double r = std::abs(v[k]);
    if (r > cutoff) {
      const complex phase = std::conj(v[k]) / r;
      for (auto& y : v) y *= phase;
      v[k] = r;
      return;
    }
  }
}

} // namespace vurkit

#endif // VURKIT_CORE_MATRIX_HPP
