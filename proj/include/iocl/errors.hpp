#ifndef IOCL_ERRORS_HPP
#define IOCL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iocl {

/// Base class for failures of the numerical routines (solvers, EM, recovery).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class SingularOperator : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotStabilizable : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NoConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularJacobian : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NumericalBreakdown : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularStats : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class MonotonicityViolation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class UnstableDynamics : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class BadInitialization : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularP : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InconsistentSequence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Configuration / input-validation failure. Carries the offending field path
/// in the message, e.g. "system.A: expected 4x4 matrix".
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace iocl

#endif  // IOCL_ERRORS_HPP
