#pragma once

#include <stdexcept>
#include <string>

namespace pathmax {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file; the message names the offending line.
struct ParseError : Error {
  using Error::Error;
};

// A documented precondition does not hold (negative label, short loop,
// k out of range, invalid path, ...). The message states the violated
// condition.
struct HypothesisError : Error {
  using Error::Error;
};

// An enumeration exceeded its configured cap.
struct LimitError : Error {
  using Error::Error;
};

}  // namespace pathmax
