#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbitscope {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two objects that must share a vertex count do not.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

// A vertex id, color id or parameter lies outside its allowed range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// An object violates its structural invariants (e.g. a partition whose
// classes overlap, a fix sequence with repeated vertices).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// The operation requires a discrete coloring and got a non-discrete one.
class NotDiscrete : public Error {
 public:
  using Error::Error;
};

// No fixable vertex exists (the partition is already discrete).
class NoCandidate : public Error {
 public:
  using Error::Error;
};

// Refinement did not stabilize within its round cap. Always a bug.
class RoundCapExceeded : public Error {
 public:
  using Error::Error;
};

// The brute-force oracle refuses inputs above its size limit.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

// Input text could not be parsed. Line and column are 1-based; column 0
// means "whole line".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace orbitscope
