#pragma once

#include <stdexcept>
#include <string>

namespace df {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size budget (vertex count, ball radius, pair count...) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Input file or string could not be parsed; the message carries the line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An algebraic precondition failed (d*d != 0, not a chain map, bad group table...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace df
