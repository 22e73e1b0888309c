#pragma once

#include <stdexcept>
#include <string>

namespace pfvs {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Rotation data does not describe a sphere embedding (face count off).
struct EulerViolation : Error {
  using Error::Error;
};

// An arc end is missing from, duplicated in, or listed at the wrong vertex
// of the rotation input.
struct DanglingEnd : Error {
  using Error::Error;
};

// Operation requires a connected graph.
struct NotConnected : Error {
  using Error::Error;
};

// Explored-node or enumeration budget exhausted before an exact answer.
struct GuardExceeded : Error {
  using Error::Error;
};

// A cycle family handed in as arc-disjoint actually shares an arc.
struct CrossingInput : Error {
  using Error::Error;
};

// Instance claims digirth g but contains structure only possible below g.
struct DigirthViolation : Error {
  using Error::Error;
};

// Caller broke a documented precondition (bad sizes, ids out of range, ...).
struct PreconditionViolated : Error {
  using Error::Error;
};

// Min feedback arc set and max arc-disjoint packing disagree on an embedded
// planar instance, where they must coincide.
struct LyViolation : Error {
  using Error::Error;
};

// Bound formulas only exist for digirth >= 4.
struct UnsupportedGirth : Error {
  using Error::Error;
};

// Requested ratio has a zero denominator (acyclic instance).
struct UndefinedRatio : Error {
  using Error::Error;
};

// Generator parameters describe an impossible instance.
struct InfeasibleSpec : Error {
  using Error::Error;
};

// Randomized generator gave up after the configured retry budget.
struct RetriesExhausted : Error {
  using Error::Error;
};

// Malformed text input; message carries the line number.
struct ParseError : Error {
  using Error::Error;
};

// An internal invariant failed; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace pfvs
