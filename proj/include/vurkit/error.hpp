#ifndef VURKIT_ERROR_HPP
#define VURKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vurkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not agree (or a matrix is not square).
class DimensionError : public Error {
public:
  using Error::Error;
};

/// A matrix handed to the spectral machinery is not Hermitian.
class NotHermitianError : public Error {
public:
  NotHermitianError(const std::string& what, double max_asymmetry)
      : Error(what), max_asymmetry_(max_asymmetry) {}

  double max_asymmetry() const noexcept { return max_asymmetry_; }

private:
  double max_asymmetry_;
};

/// A state vector or density matrix violates normalization/positivity.
class InvalidStateError : public Error {
public:
  using Error::Error;
};

/// An argument lies outside the domain of a formula (c outside (0,1], alpha <= 0, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace vurkit

#endif // VURKIT_ERROR_HPP
