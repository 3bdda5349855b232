#pragma once

#include <stdexcept>
#include <string>

namespace qpd {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

// Input violates a mathematical precondition (zero divisor, non-Hermitian,
// non-positive-definite, bad parameter value).
class DomainError : public Error {
public:
  using Error::Error;
};

class SingularError : public Error {
public:
  SingularError(const std::string& what, double pivot_magnitude)
      : Error(what), pivot_magnitude(pivot_magnitude) {}
  double pivot_magnitude;
};

// Requested value lies outside a tabulated range.
class RangeError : public Error {
public:
  using Error::Error;
};

class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& what, double last_grad_norm, int iterations)
      : Error(what), last_grad_norm(last_grad_norm), iterations(iterations) {}
  double last_grad_norm;
  int iterations;
};

// A numerical self-check failed (eigenvalue pairing, reconstruction).
class InternalError : public Error {
public:
  using Error::Error;
};

// Malformed or schema-violating input file.
class FormatError : public Error {
public:
  using Error::Error;
};

}  // namespace qpd
