#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsyn {

/// Base class for all user-facing errors (bad input, unsatisfiable request).
/// Internal invariant violations use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error with a 1-based character position (expressions) or the
/// position baked into the message (file formats report line numbers).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error("syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lsyn
