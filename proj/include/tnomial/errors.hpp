// Error types shared across the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tnomial {

// A request that exceeds a configured resource budget (table size, enumeration
// range, ...). Callers can fall back or rerun with a larger budget; the CLI
// maps this to exit code 2.
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error in polynomial / field text input, with the byte offset that
// triggered it.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tnomial
