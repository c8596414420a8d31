#pragma once

#include <stdexcept>
#include <string>

namespace hjj {

// Every failure the library reports deliberately goes through one of these.
// Callers that care can catch the specific type; the CLI maps them to exit
// code 2 (bad input / unmet precondition) as opposed to a negative verdict.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

// Two orientations of the same basis product were given with different values.
struct ConflictingProduct : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// quotient_basis(z, b) with b not contained in z.
struct NotASubspace : Error {
  using Error::Error;
};

// current/tensor factor fails its commutativity/associativity checks.
struct InvalidFactor : Error {
  using Error::Error;
};

// Two objects were built over different base algebras.
struct AlgebraMismatch : Error {
  using Error::Error;
};

// Operators over different representations were combined.
struct RepresentationMismatch : Error {
  using Error::Error;
};

// An inverse of the twist (or of the representation map) was required.
struct SingularTwist : Error {
  using Error::Error;
};

struct DegreeCapExceeded : Error {
  using Error::Error;
};

struct NotRotaBaxter : Error {
  using Error::Error;
};

struct NotAMember : Error {
  using Error::Error;
};

struct NotAGenerator : Error {
  using Error::Error;
};

struct InvalidSeries : Error {
  using Error::Error;
};

struct PreconditionFailed : Error {
  using Error::Error;
};

// d^n ∘ δ^{n-1} came out nonzero on inputs that pass verification; this is an
// internal consistency failure, not a property of the input.
struct ZigzagViolation : Error {
  using Error::Error;
};

}  // namespace hjj
