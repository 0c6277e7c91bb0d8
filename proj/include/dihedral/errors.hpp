#pragma once

#include <stdexcept>
#include <string>

namespace dihedral {

// Base class for all domain errors raised by the library.  The CLI maps
// these to exit code 1; usage problems are reported separately.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Generating-set or size parameters violate a structural constraint.
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

// The family is degenerate: the associated polynomial vanishes identically
// (equivalently q = 0), so no closed-form engine applies.
class DegenerateFamily : public Error {
 public:
  using Error::Error;
};

// The requested graph is disconnected, so a spanning tree does not exist.
class Disconnected : public Error {
 public:
  using Error::Error;
};

// An exact integrality guarantee failed; indicates a logic error upstream.
class DivisibilityViolation : public Error {
 public:
  using Error::Error;
};

// A structural identity (perfect-square factor, parity split) failed.
class StructureViolation : public Error {
 public:
  using Error::Error;
};

// Trial division exhausted its bound before the factorization finished.
class FactorizationLimit : public Error {
 public:
  using Error::Error;
};

// A numeric root finder produced a candidate failing its residual check.
class RootFindingFailed : public Error {
 public:
  using Error::Error;
};

// A quadrature sample that must be positive was not.
class NonPositiveSample : public Error {
 public:
  using Error::Error;
};

// Too few sequence terms were supplied to attempt a recurrence fit.
class InsufficientTerms : public Error {
 public:
  using Error::Error;
};

// No linear recurrence within the order cap fits the supplied terms.
class NoRecurrenceFound : public Error {
 public:
  using Error::Error;
};

// A generating function expected to have integer coefficients does not.
class NonIntegerCoefficients : public Error {
 public:
  using Error::Error;
};

// An operation that requires a nonzero polynomial received zero.
class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

}  // namespace dihedral
