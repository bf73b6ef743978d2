#pragma once

#include <stdexcept>
#include <string>

namespace latticircle {

// Bad radius, bad index, inadmissible cost variant, malformed input.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An integer intermediate left the supported 128-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A sequence that an estimator cannot average (empty, or a zero distance).
class DegenerateSequence : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace latticircle
