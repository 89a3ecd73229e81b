#pragma once

#include <stdexcept>
#include <string>

namespace gaussia {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid dimension, mode index, partition or parameter value.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Structurally malformed input document (JSON shape, types, missing keys).
class FormatError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Matrix violates the uncertainty principle (some symplectic eigenvalue < 1).
class NotBonaFide : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a pure state received a mixed one.
class NotPure : public Error {
 public:
  using Error::Error;
};

/// Requested configuration exists mathematically but is not supported here,
/// e.g. multi-mode measured subsystems.
class Unsupported : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Optimizer stopped before reaching its tolerance. Carries the best value
/// seen so callers may still inspect it.
class NotConverged : public Error {
 public:
  NotConverged(const std::string& what, double best_value)
      : Error(what), best_value_(best_value) {}
  double best_value() const noexcept { return best_value_; }

 private:
  double best_value_;
};

/// Constrained search exhausted its budget without a feasible point.
class Infeasible : public Error {
 public:
  Infeasible(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace gaussia
