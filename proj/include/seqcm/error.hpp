#pragma once

#include <stdexcept>
#include <string>

namespace seqcm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings.
struct RingMismatchError : Error {
  RingMismatchError() : Error("ring mismatch") {}
  explicit RingMismatchError(const std::string& what) : Error(what) {}
};

/// A basis computation exceeded the ring's total-degree guard.
struct DegreeCapError : Error {
  explicit DegreeCapError(const std::string& what) : Error(what) {}
};

/// Quotient is not of finite length.
struct NotArtinianError : Error {
  explicit NotArtinianError(const std::string& what) : Error(what) {}
};

/// Quotient has finite length but support off the origin, so the affine
/// count would differ from the local length.
struct NotOriginSupportedError : Error {
  explicit NotOriginSupportedError(const std::string& what) : Error(what) {}
};

/// Supplied elements are not a system of parameters (or not good).
struct NotSopError : Error {
  explicit NotSopError(const std::string& what) : Error(what) {}
};

/// Deterministic parameter search ran out of candidates within its bounds.
struct SearchExhaustedError : Error {
  explicit SearchExhaustedError(const std::string& what) : Error(what) {}
};

/// Finite-difference extraction did not stabilize within the window budget.
struct StabilizationError : Error {
  explicit StabilizationError(const std::string& what) : Error(what) {}
};

/// Malformed user input (files, flags, complexes).
struct InputError : Error {
  explicit InputError(const std::string& what) : Error(what) {}
};

}  // namespace seqcm
