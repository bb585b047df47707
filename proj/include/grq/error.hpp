#pragma once

#include <stdexcept>
#include <string>

namespace grq {

// Malformed input: wrong shapes, bad labels, mismatched algebras.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Operation called outside its domain (e.g. tau of a projective).
class PreconditionError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Label parse failure; pos is a 0-based byte offset into the input.
class ParseError : public UsageError {
 public:
  ParseError(std::size_t pos, const std::string& what)
      : UsageError("parse error at " + std::to_string(pos) + ": " + what), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Something that must hold mathematically did not. Always a bug or an
// unsupported situation (e.g. End/rad bigger than F_p).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace grq
