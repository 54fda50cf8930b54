#ifndef VURKIT_CORE_STATE_HPP
#define VURKIT_CORE_STATE_HPP

#include <cmath>
#include <sstream>
#include <variant>
#include <vector>

#include "vurkit/config.hpp"
#include "vurkit/core/jacobi.hpp"
#include "vurkit/core/matrix.hpp"

namespace vurkit {

/// A pure state vector or a density matrix. Construction validates normalization
/// (and, for density matrices, Hermiticity and positivity).
class QuantumState {
public:
  struct Pure {
    ComplexVector amplitudes;
    friend bool operator==(const Pure&, const Pure&) = default;
  };
  struct Density {
    ComplexMatrix rho;
    friend bool operator==(const Density&, const Density&) = default;
  };

  static QuantumState pure(ComplexVector amplitudes, const Tolerances& tol = default_tolerances()) {
    if (amplitudes.empty()) throw DimensionError("pure state: empty amplitude vector");
    for (const auto& x : amplitudes)
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
        throw InvalidStateError("pure state: non-finite amplitude");
    const double nrm2 = std::real(inner(amplitudes, amplitudes));
    if (std::abs(nrm2 - 1.0) > tol.normalization) {
      std::ostringstream os;
      os << "pure state: squared norm " << nrm2 << " differs from 1";
      throw InvalidStateError(os.str());
    }
    return QuantumState(Pure{std::move(amplitudes)});
  }

  /// Rescales to unit norm first.
  static QuantumState pure_normalized(ComplexVector amplitudes) {
    const double nrm = norm(amplitudes);
    if (!(nrm > 0.0)) throw InvalidStateError("pure state: zero vector");
    for (auto& x : amplitudes) x /= nrm;
    return pure(std::move(amplitudes));
  }

  static QuantumState density(ComplexMatrix rho, const Tolerances& tol = default_tolerances()) {
    if (rho.dim() == 0) throw DimensionError("density matrix: empty");
    const double asym = max_asymmetry(rho);
    if (asym > tol.hermiticity) {
      std::ostringstream os;
      os << "density matrix: not Hermitian (max asymmetry " << asym << ")";
      throw InvalidStateError(os.str());
    }
    const complex tr = rho.trace();
    if (std::abs(tr - 1.0) > tol.normalization) {
      std::ostringstream os;
      os << "density matrix: trace " << tr.real() << " differs from 1";
      throw InvalidStateError(os.str());
    }
    const auto es = jacobi_eigensystem(rho);
    if (es.values.front() < -tol.positivity) {
      std::ostringstream os;
      os << "density matrix: negative eigenvalue " << es.values.front();
      throw InvalidStateError(os.str());
    }
    return QuantumState(Density{std::move(rho)});
  }

  /// I/n
  static QuantumState maximally_mixed(std::size_t n) {
    ComplexMatrix rho = ComplexMatrix::identity(n);
    rho *= 1.0 / static_cast<double>(n);
    return density(std::move(rho));
  }

  std::size_t dim() const {
    return is_pure() ? std::get<Pure>(repr_).amplitudes.size() : std::get<Density>(repr_).rho.dim();
  }

  bool is_pure() const noexcept { return std::holds_alternative<Pure>(repr_); }

  const ComplexVector& amplitudes() const { return std::get<Pure>(repr_).amplitudes; }
  const ComplexMatrix& density_matrix() const { return std::get<Density>(repr_).rho; }

  /// Density-matrix form, valid for either variant.
  ComplexMatrix to_density() const { return is_pure() ? outer(amplitudes()) : density_matrix(); }

  /// <v|state|v>, the Born weight of a normalized vector.
  double weight(std::span<const complex> v) const {
    if (v.size() != dim()) throw DimensionError("state weight: dimension mismatch");
    if (is_pure()) return std::norm(inner(v, amplitudes()));
    const ComplexVector rv = density_matrix() * v;
    return std::real(inner(v, rv));
  }

  /// <O> = Tr(rho O) for an arbitrary matrix O.
  complex expect(const ComplexMatrix& op) const {
    if (op.dim() != dim()) throw DimensionError("expectation: dimension mismatch");
    if (is_pure()) {
      const ComplexVector ov = op * amplitudes();
      return inner(amplitudes(), ov);
    }
    const ComplexMatrix& rho = density_matrix();
    complex s = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i)
      for (std::size_t j = 0; j < rho.dim(); ++j) s += rho(i, j) * op(j, i);
    return s;
  }

  friend bool operator==(const QuantumState&, const QuantumState&) = default;

private:
  explicit QuantumState(std::variant<Pure, Density> r) : repr_(std::move(r)) {}
  std::variant<Pure, Density> repr_;
};

/// |psi> (x) |phi>
inline QuantumState product_state(const QuantumState& a, const QuantumState& b) {
  if (a.is_pure() && b.is_pure()) return QuantumState::pure_normalized(kron(a.amplitudes(), b.amplitudes()));
  return QuantumState::density(kron(a.to_density(), b.to_density()));
}

} // namespace vurkit

#endif // VURKIT_CORE_STATE_HPP
