#pragma once

#include <stdexcept>
#include <string>

namespace crlab {

/// Raised when an argument lies outside the domain of an operation
/// (unknown root, registry mismatch, non-collectible word, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the expression parsers.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace crlab
