#pragma once

#include <stdexcept>

namespace holomatch {

/// Raised on inversion or division by an exact zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Raised when a scalar literal or a text file cannot be parsed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on an input that violates its documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rotation system is not a genus-0 embedding, or external nodes are not on a common face.
class PlanarityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its configured size limit.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace holomatch
