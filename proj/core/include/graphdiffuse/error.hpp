#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphdiffuse {

// Every failure raised by the library derives from Error so callers can catch
// the whole family at once.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (alpha0 <= 0, a
// vertex that is not on the boundary, a disconnected graph where connectivity
// is assumed, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// Dense factorization broke down. pivot() is the zero-based leading minor at
// which positivity (or invertibility) was lost.
class FactorizationError : public Error {
public:
  FactorizationError(const std::string& what, std::size_t pivot)
      : Error(what), pivot_(pivot) {}
  std::size_t pivot() const noexcept { return pivot_; }

private:
  std::size_t pivot_;
};

// A closed-form expression hit an exact pole (1 + t = r, 1 + a k lambda = 0, ...).
class SingularityError : public Error {
public:
  using Error::Error;
};

class UnsupportedError : public Error {
public:
  using Error::Error;
};

// Iterative numerics failed to reach the requested tolerance.
class NumericalError : public Error {
public:
  NumericalError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

private:
  double achieved_;
};

// Truncation bound requested outside the region where the geometric sum converges.
class BoundUndefinedError : public Error {
public:
  using Error::Error;
};

class CompletenessError : public Error {
public:
  using Error::Error;
};

class DegeneracyError : public Error {
public:
  using Error::Error;
};

}  // namespace graphdiffuse
