#pragma once

#include <stdexcept>
#include <string>

namespace lowscat {

// Base class for every error thrown by this library. The CLI maps the
// subtree to exit codes (config 2, numerical 3, io 4).
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidArgumentError : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

// derive_range exceeded max_radius without finding a negligible tail.
class RangeNotFoundError : public Error {
public:
  using Error::Error;
};

// Numerov denominator 1 + dr^2 xi/12 vanished.
class StepFailureError : public Error {
public:
  using Error::Error;
};

class InstabilityError : public Error {
public:
  using Error::Error;
};

// u(R+dr) == u(R-dr): the three-point derivative at R is zero.
class DegenerateDerivativeError : public Error {
public:
  using Error::Error;
};

class MatchingSingularError : public Error {
public:
  using Error::Error;
};

// a == 0: the g = 1 - r/a normalization has no limit.
class EffectiveRangeUndefinedError : public Error {
public:
  using Error::Error;
};

class NoBoundStateError : public Error {
public:
  using Error::Error;
};

class FiniteRangeFormulaError : public Error {
public:
  using Error::Error;
};

// Closed-form expression evaluated too close to a pole.
class DivergenceError : public Error {
public:
  DivergenceError(const std::string& msg, double pole) : Error(msg), nearest_pole(pole) {}
  double nearest_pole;
};

class NoBracketError : public Error {
public:
  NoBracketError(const std::string& msg, double lo = 0, double hi = 0)
      : Error(msg), objective_lo(lo), objective_hi(hi) {}
  double objective_lo;
  double objective_hi;
};

class ConvergenceFailureError : public Error {
public:
  using Error::Error;
};

class ContractViolationError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace lowscat
