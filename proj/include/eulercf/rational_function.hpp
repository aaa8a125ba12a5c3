#pragma once

#include <iosfwd>
#include <string>

#include "eulercf/polynomial.hpp"

namespace eulercf {

/// Quotient of two polynomials in one formal variable, held in canonical
/// form: numerator and denominator are coprime polynomials with integer
/// coefficients whose joint content is 1, and the denominator has a
/// positive leading coefficient. Zero is 0/1. Two rational functions are
/// equal iff their canonical components are equal.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial num);  // NOLINT(implicit)
  /// Throws ArithmeticError when den is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  /// Throws ArithmeticError at a pole.
  BigRational operator()(const BigRational& at) const;

  /// "(num)/(den)" with ascending-degree polynomials, e.g.
  /// "(3 + 9z^2)/(3 + z^2)".
  std::string to_string(char var = 'x') const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace eulercf
