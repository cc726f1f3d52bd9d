#pragma once

#include <stdexcept>
#include <string>

namespace cocopos {

// Base of every error raised by the library. Inequality failures are never
// errors; they are reported through CheckReport.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand dimensions do not conform.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// Input outside the mathematical domain of an operation (e.g. non-Hermitian
// matrix handed to the Hermitian eigensolver).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double offdiag_residual)
      : Error(what), offdiag_residual_(offdiag_residual) {}

  double offdiag_residual() const noexcept { return offdiag_residual_; }

 private:
  double offdiag_residual_;
};

// Invalid argument combination supplied by a caller (bad enum name, m != n
// for a Choi matrix, trials == 0, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

// A theorem hypothesis (PSD, PPT) does not hold for the supplied input.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed document carrying invalid content (non-finite values,
// inconsistent block shape).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace cocopos
