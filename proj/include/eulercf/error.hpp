#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eulercf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside a family's or oracle's accepted domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Division by zero, indeterminate convergents, zero scale factors.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Failures of the exact-algebra layer (no termination, gcd of zeros).
class AlgebraError : public Error {
 public:
  using Error::Error;
};

/// Two independent oracle routes disagree. Always a bug, never bad input.
class OracleError : public Error {
 public:
  using Error::Error;
};

/// Convergents grew monotonically past the configured pole magnitude.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, std::size_t depth)
      : Error(what), depth_(depth) {}
  std::size_t depth() const noexcept { return depth_; }

 private:
  std::size_t depth_;
};

/// Adaptive evaluation exhausted max_depth. Carries the best value seen.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_value, double est_error,
                   std::size_t depth)
      : Error(what), best_value_(best_value), est_error_(est_error), depth_(depth) {}

  double best_value() const noexcept { return best_value_; }
  double est_error() const noexcept { return est_error_; }
  std::size_t depth() const noexcept { return depth_; }

 private:
  double best_value_;
  double est_error_;
  std::size_t depth_;
};

}  // namespace eulercf
