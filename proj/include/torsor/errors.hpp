#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torsor {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document. Carries the 1-based line number (0 when unknown).
class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A structure fails one of its defining axioms; the message names a witness.
class invariant_error : public error {
 public:
  using error::error;
};

/// An operation was called outside its precondition.
class precondition_error : public error {
 public:
  using error::error;
};

}  // namespace torsor
