#ifndef TQASM_ERRORS_HPP
#define TQASM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tqasm {

/// Raised on division by an exact zero (Rational, CycloQ6, Laurent).
class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Raised when an exact polynomial division leaves a remainder.
/// The rendered remainder is kept so the caller can report it.
class NonDivisible : public std::runtime_error {
 public:
  NonDivisible(const std::string& what, std::string remainder)
      : std::runtime_error(what + ": remainder " + remainder),
        remainder_(std::move(remainder)) {}

  const std::string& remainder() const noexcept { return remainder_; }

 private:
  std::string remainder_;
};

/// Raised when a numeric routine fails to converge.
class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a computed structure contradicts an asserted property
/// (nullspace dimension, integrality of a recursion step, root pairing).
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tqasm

#endif  // TQASM_ERRORS_HPP
