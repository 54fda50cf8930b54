#ifndef VURKIT_CONFIG_HPP
#define VURKIT_CONFIG_HPP

namespace vurkit {

/// Numerical tolerances shared by the validation gates.
struct Tolerances {
  double hermiticity = 1e-10;     ///< max |m_ij - conj(m_ji)|
  double orthonormality = 1e-10;  ///< max |<v_i|v_j> - delta_ij|
  double reconstruction = 1e-9;   ///< entrywise, sum a_i |v_i><v_i| vs source
  double normalization = 1e-10;   ///< |<psi|psi> - 1|, |Tr rho - 1|
  double positivity = 1e-9;       ///< smallest admissible density eigenvalue is -positivity
  double distribution = 1e-8;     ///< probability vectors: sum and sign slack
  double mub = 1e-8;              ///< overlap deviation from 1/sqrt(n)
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

} // namespace vurkit

#endif // VURKIT_CONFIG_HPP
