#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "eulercf/big_rational.hpp"

namespace eulercf {

/// Dense univariate polynomial over the rationals, coefficients stored by
/// ascending degree with trailing zeros stripped. The zero polynomial has
/// no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(BigRational constant);  // NOLINT(implicit)
  template <std::integral I>
  Polynomial(I constant) : Polynomial(BigRational(constant)) {}  // NOLINT(implicit)
  explicit Polynomial(std::vector<BigRational> coefficients);

  /// The formal variable itself.
  static Polynomial variable();
  static Polynomial monomial(BigRational coefficient, std::size_t degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }
  BigRational coefficient(std::size_t degree) const;
  /// Leading coefficient; zero for the zero polynomial.
  BigRational leading() const;

  /// Horner evaluation.
  BigRational operator()(const BigRational& at) const;

  /// Positive rational c such that *this / c has coprime integer coefficients.
  /// Zero for the zero polynomial.
  BigRational content() const;
  Polynomial primitive_part() const;
  /// Divides by the leading coefficient. The zero polynomial stays zero.
  Polynomial monic() const;

  /// Ascending-degree rendering, e.g. "3 + 9z^2" or "-3t + t^3".
  std::string to_string(char var = 'x') const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<BigRational> coeffs_;
};

/// Quotient and remainder over Q. Throws ArithmeticError for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Pseudo-remainder: lc(q)^(deg p - deg q + 1) * p mod q, computed without
/// rational division.
Polynomial pseudo_remainder(const Polynomial& p, const Polynomial& q);

/// Monic gcd via the primitive pseudo-remainder sequence.
/// Throws AlgebraError when both arguments are zero.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace eulercf
