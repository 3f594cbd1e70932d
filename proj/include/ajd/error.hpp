#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ajd {

/// Malformed or out-of-contract input (bad syntax, letter beyond the alphabet,
/// non-homogeneous chain where one is required, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A computation refused because it would exceed a configured size bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ajd
