#pragma once

#include <stdexcept>
#include <string>

namespace matchstick {

/// Raised when caller-supplied data violates an operation's contract
/// (malformed rotation system, bad file, out-of-range parameter).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a library-internal identity fails on data the library itself
/// produced. Seeing one of these means a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace matchstick
