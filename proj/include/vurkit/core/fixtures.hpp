#ifndef VURKIT_CORE_FIXTURES_HPP
#define VURKIT_CORE_FIXTURES_HPP

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "vurkit/core/measurement.hpp"

namespace vurkit::fixtures {

inline ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix pauli_y() { return {{0.0, complex(0.0, -1.0)}, {complex(0.0, 1.0), 0.0}}; }
inline ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

/// sigma_x, sigma_y, sigma_z in spectral form.
inline std::vector<SpectralObservable> pauli3() {
  return {eigendecompose(pauli_x()), eigendecompose(pauli_y()), eigendecompose(pauli_z())};
}

/// How the phases of the second qutrit matrix are read.
enum class QutritPhases {
  AsPrinted,     ///< e^{k pi i}, k = 5,4,3,1,2 (real signs times i/sqrt 3)
  ThirdsOfPi,    ///< e^{k pi i / 3}, matching the other two rotated matrices
};

namespace detail {
// e^{i phi0}/sqrt(3) * [[0, w^5, w^4], [1, 0, w^3], [w, w^2, 0]] with w = e^{i step}
inline ComplexMatrix qutrit_cycle(double phi0, double step) {
  const auto w = [step](int k) { return std::polar(1.0, k * step); };
  const complex pre = std::polar(1.0 / std::sqrt(3.0), phi0);
  ComplexMatrix m{{0.0, w(5), w(4)}, {1.0, 0.0, w(3)}, {w(1), w(2), 0.0}};
  m *= pre;
  return m;
}
} // namespace detail

/// The four 3x3 matrices whose eigenbases form a complete set of qutrit MUBs.
inline std::vector<ComplexMatrix> qutrit4_matrices(QutritPhases reading = QutritPhases::AsPrinted) {
  using std::numbers::pi;
  const double step1 = reading == QutritPhases::AsPrinted ? pi : pi / 3.0;
  return {
      ComplexMatrix{{1.0, 0.0, 0.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, 0.0}},
      detail::qutrit_cycle(pi / 2.0, step1),
      detail::qutrit_cycle(pi / 6.0, pi / 3.0),
      detail::qutrit_cycle(-pi / 6.0, -pi / 3.0),
  };
}

/// Loads one reading of the qutrit set; nullopt unless every matrix is Hermitian and
/// the eigenbases are mutually unbiased.
inline std::optional<std::vector<SpectralObservable>> try_qutrit4(QutritPhases reading) {
  std::vector<SpectralObservable> obs;
  for (const auto& m : qutrit4_matrices(reading)) {
    if (!validate_hermitian(m)) return std::nullopt;
    obs.push_back(eigendecompose(m));
  }
  if (!is_mub(obs)) return std::nullopt;
  return obs;
}

/// Loads one reading of the qutrit set, throwing NotHermitianError or Error when the
/// reading does not produce Hermitian matrices with mutually unbiased eigenbases.
inline std::vector<SpectralObservable> load_qutrit4(QutritPhases reading) {
  std::vector<SpectralObservable> obs;
  for (const auto& m : qutrit4_matrices(reading)) obs.push_back(eigendecompose(m));
  if (!is_mub(obs)) throw Error("qutrit4: eigenbases are not mutually unbiased");
  return obs;
}

/// First phase reading that passes the Hermitian + MUB checks.
inline std::vector<SpectralObservable> qutrit4() {
  for (auto reading : {QutritPhases::AsPrinted, QutritPhases::ThirdsOfPi})
    if (auto obs = try_qutrit4(reading)) return *obs;
  throw Error("qutrit4: no phase reading yields a mutually unbiased set");
}

/// (|01> - |10>)/sqrt 2
inline QuantumState singlet() {
  const double r = 1.0 / std::sqrt(2.0);
  return QuantumState::pure({0.0, r, -r, 0.0});
}

inline QuantumState ket00() { return QuantumState::pure({1.0, 0.0, 0.0, 0.0}); }

inline QuantumState maximally_mixed_2q() { return QuantumState::maximally_mixed(4); }

inline std::optional<std::vector<SpectralObservable>> observable_set(const std::string& name) {
  if (name == "pauli3") return pauli3();
  if (name == "qutrit4") return qutrit4();
  if (name == "qutrit4-printed") return load_qutrit4(QutritPhases::AsPrinted);
  if (name == "qutrit4-thirds") return load_qutrit4(QutritPhases::ThirdsOfPi);
  if (name == "sigma-x") return std::vector{eigendecompose(pauli_x())};
  if (name == "sigma-y") return std::vector{eigendecompose(pauli_y())};
  if (name == "sigma-z") return std::vector{eigendecompose(pauli_z())};
  return std::nullopt;
}

inline std::optional<QuantumState> state(const std::string& name) {
  if (name == "singlet") return singlet();
  if (name == "ket00") return ket00();
  if (name == "mixed2") return maximally_mixed_2q();
  return std::nullopt;
}

inline std::vector<std::string> observable_set_names() {
  return {"pauli3", "qutrit4", "qutrit4-printed", "qutrit4-thirds", "sigma-x", "sigma-y", "sigma-z"};
}

inline std::vector<std::string> state_names() { return {"singlet", "ket00", "mixed2"}; }

} // namespace vurkit::fixtures

#endif // VURKIT_CORE_FIXTURES_HPP
