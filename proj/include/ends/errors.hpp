#pragma once

#include <stdexcept>
#include <string>

namespace ends {

/// Operand or argument outside the domain of an operation (bad generator
/// index, cross-group operands, malformed literal).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (ball size) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A query fell outside a finite truncation.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A bounded check could not classify its input at the given radius.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A boundary encoding whose crossing parity is not well defined.
class InvalidEncodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ends
