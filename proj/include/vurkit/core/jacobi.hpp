#ifndef VURKIT_CORE_JACOBI_HPP
#define VURKIT_CORE_JACOBI_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "vurkit/core/matrix.hpp"

namespace vurkit {

struct JacobiOptions {
  double relative_tol = 1e-12;  ///< stop when off(A)_F <= relative_tol * ||A||_F
  int max_sweeps = 100;
};

/// Eigenpairs of a Hermitian matrix, ascending. Column i of `vectors` pairs with values[i].
struct HermitianEigensystem {
  std::vector<double> values;
  ComplexMatrix vectors;
  int sweeps = 0;
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Applies A <- U^H A U and V <- V U, where U acts as the 2x2 block
// [[u_pp, u_pq], [u_qp, u_qq]] on indices (p, q) and as the identity elsewhere.
inline void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q, complex u_pp,
                   complex u_pq, complex u_qp, complex u_qq) {
  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * u_pp + akq * u_qp;
    a(k, q) = akp * u_pq + akq * u_qq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
    a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * u_pp + vkq * u_qp;
    v(k, q) = vkp * u_pq + vkq * u_qq;
  }
}

} // namespace detail

/// Cyclic Jacobi eigensolver for a complex Hermitian matrix.
///
/// Each pivot (p, q) is first made real by a diagonal phase and then annihilated by
/// a real plane rotation; the composite unitary is accumulated into the eigenvector
/// matrix. The input is assumed Hermitian (callers gate with validate_hermitian);
/// only its Hermitian part is effectively used. Eigenvalues are returned ascending and
/// each eigenvector has its first non-negligible component made real and positive.
inline HermitianEigensystem jacobi_eigensystem(const ComplexMatrix& m, const JacobiOptions& opt = {}) {
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  // symmetrize so the iteration sees an exactly Hermitian operand
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const complex h = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = h;
      a(j, i) = std::conj(h);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = frobenius_norm(a);
  const double target = opt.relative_tol * scale;
  int sweep = 0;
  while (sweep < opt.max_sweeps && detail::off_diagonal_norm(a) > target) {
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0 || mag < 1e-300) continue;
        const complex phase = apq / mag;  // a_pq = mag * phase
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // U = diag(1, conj(phase)) * [[c, s], [-s, c]]
        const complex cp = std::conj(phase);
        detail::rotate(a, v, p, q, c, s, -s * cp, c * cp);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigensystem out;
  out.sweeps = sweep;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    ComplexVector col = v.column(order[k]);
    fix_phase(col);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = col[i];
  }
  return out;
}

} // namespace vurkit

#endif // VURKIT_CORE_JACOBI_HPP
