#pragma once

#include <stdexcept>
#include <string>

namespace jssp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad instance data, an invalid operation sequence,
/// mismatched dimensions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A set of machine orders (or fixed arcs) that induces a cycle.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// A brute-force routine refused to run because the space is too large.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// An iteration or wall-clock budget ran out before a result was found.
class TimeoutError : public Error {
 public:
  using Error::Error;
};

/// A multi-solve computation could not prove one of its sub-results.
class PartialResultError : public Error {
 public:
  using Error::Error;
};

}  // namespace jssp
