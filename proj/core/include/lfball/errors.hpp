#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lfball {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not match (non-square input, length mismatch, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A point lies outside the domain of an operation (e.g. |z| >= 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A linear fractional expression hit its pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A matrix expected to be positive semidefinite has a negative eigenvalue.
class NotPsdError : public Error {
 public:
  NotPsdError(const std::string& what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

/// Gram matrix or factorization too close to singular.
class IllConditionedError : public Error {
 public:
  using Error::Error;
};

/// A map sent an interior point to the boundary or outside the ball.
class NotSelfMapError : public Error {
 public:
  using Error::Error;
};

/// Map data violates a validated-map invariant (half-space or ball).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An iterative estimate did not settle; carries a diagnostic message.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// Orbit came too close to the sphere for double precision.
class PrecisionExhaustedError : public Error {
 public:
  PrecisionExhaustedError(const std::string& what, std::size_t last_reliable_n)
      : Error(what), last_reliable_n_(last_reliable_n) {}
  std::size_t last_reliable_n() const noexcept { return last_reliable_n_; }

 private:
  std::size_t last_reliable_n_;
};

}  // namespace lfball
