#pragma once

#include <stdexcept>
#include <string>

namespace mdrlab {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Input outside the operation's domain (non-unit axis, bad site, bad flag).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// a and b are (nearly) parallel so a x b cannot define a Bell-pair axis.
class DegenerateAxesError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Projective preparation asked for a branch that never occurs.
class ZeroProbabilityError : public Error {
  public:
    using Error::Error;
};

/// Round-off produced a value that cannot be a physical result.
class NumericalError : public Error {
  public:
    using Error::Error;
};

class ConvergenceError : public Error {
  public:
    using Error::Error;
};

}  // namespace mdrlab
