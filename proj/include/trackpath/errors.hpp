#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "trackpath/types.hpp"

namespace trackpath {

/// Base of every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input does not belong to the graph class an algorithm requires
/// (directed vs. undirected, chordal, tournament). `witness` carries the
/// vertices that certify the mismatch when one exists, e.g. a chordless cycle
/// or an unordered pair with zero or two arcs.
class ClassMismatchError : public Error {
 public:
  ClassMismatchError(const std::string& what, std::vector<VertexId> witness = {})
      : Error(what), witness_(std::move(witness)) {}

  const std::vector<VertexId>& witness() const noexcept { return witness_; }

 private:
  std::vector<VertexId> witness_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine hit its configured cap (path count, vertex bound).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input; `line` is 1-based, 0 when not tied to a line.
class InputError : public Error {
 public:
  InputError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Internal consistency check failed. Never expected on valid inputs.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace trackpath
