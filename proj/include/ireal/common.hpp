#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ireal {

/// Natural numbers as they appear in states, exceptions and numerals.
using Nat = std::uint64_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TypeError : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

/// Normalization ran past its step budget. Under strong normalization this
/// signals a kernel bug or a budget that is too small for the workload.
class FuelExhausted : public Error {
 public:
  using Error::Error;
};

/// A soundness invariant (state or exception witness condition) was violated.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ireal
