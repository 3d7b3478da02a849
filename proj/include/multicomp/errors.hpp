#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multicomp {

/// Argument outside the mathematical domain of an operation (k = 0, n = 0, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value that would break a type invariant, e.g. a zero run of length k.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that does not match the composition grammar.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Internal consistency check failed (e.g. nonzero residual in a decomposition).
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace multicomp
