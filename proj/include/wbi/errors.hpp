#pragma once

#include <stdexcept>
#include <string>

namespace wbi {

/// Base of every error raised by the library. `kind()` is a stable
/// identifier used in structured CLI output.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Argument sits on a pole of a gamma factor or of a series denominator.
class PoleError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "pole"; }
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "non_convergence"; }
};

/// Connection formula requested where 2*mu is an integer.
class DegenerateParameterError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "degenerate_parameter"; }
};

class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invariant_violation"; }
};

class IllConditionedError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ill_conditioned"; }
};

class StepInstabilityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "step_instability"; }
};

class IoError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "io"; }
};

}  // namespace wbi
