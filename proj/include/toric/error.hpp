#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong shapes, unparsable data, duplicate points.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a mathematical precondition
/// (not reflexive, origin not interior, rays do not span, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
