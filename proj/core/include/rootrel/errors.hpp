#pragma once

#include <stdexcept>
#include <string>

namespace rootrel {

// Base class for all failures raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input polynomial has a repeated root (gcd(f, f') is nonconstant), or a
// derived root list collapses two conjugates onto the same value.
struct NotSquarefree : Error {
  using Error::Error;
};

// A stage needs more working precision than currently available.  Callers
// escalate the digit budget and rerun; only the pipeline turns this into a
// hard failure.
struct InsufficientPrecision : Error {
  using Error::Error;
};

// A zero test landed between the noise floor and the certification
// threshold.  Escalating precision separates the two cases.
struct AmbiguousZero : Error {
  using Error::Error;
};

// Precision escalation hit the configured maximum without resolving.
struct PrecisionExhausted : Error {
  using Error::Error;
};

// The supplied or closed permutation set is not a regular group on the
// root labels.
struct NotRegular : Error {
  using Error::Error;
};

// The polynomial does not define a Galois extension with a full set of
// automorphisms expressible over the first root.
struct NotGalois : Error {
  using Error::Error;
};

// Group classification has no handler for the two-dimensional component.
struct UnsupportedGroup : Error {
  using Error::Error;
};

// A group ring element was evaluated against roots labeled by a different
// group.
struct GroupMismatch : Error {
  using Error::Error;
};

// Assembled relation vectors were not linearly independent.  This is an
// internal consistency trap, never an expected input condition.
struct DependentBasis : Error {
  using Error::Error;
};

// The character-theoretic relation space and the lattice search disagree.
// Also an internal trap: it is never masked or retried away.
struct SpanMismatch : Error {
  using Error::Error;
};

// Malformed request (bad JSON, bad expression syntax, invalid options).
struct RequestError : Error {
  using Error::Error;
};

}  // namespace rootrel
