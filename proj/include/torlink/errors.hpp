#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torlink {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed braid words, out-of-range indices, invalid
// family parameters, mismatched strand counts.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::string const& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// The basis braids do not commute, so they do not describe a torus-covering
// link.
class NotCommutingError : public InputError {
 public:
  using InputError::InputError;
};

// An internal cross-check failed. Always a bug, never a user error.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace torlink
