#pragma once

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eulercf {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class BigRational {
 public:
  BigRational() = default;

  template <std::integral I>
  BigRational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)

  /// num/den, reduced. Throws ArithmeticError when den is zero.
  BigRational(long num, long den);

  explicit BigRational(mpq_class value);

  /// Parses "p", "p/q" or a plain decimal such as "-0.125" or "2.5e-3".
  /// Decimal input is converted exactly (0.1 becomes 1/10).
  static BigRational parse(std::string_view text);

  /// Exact value of a finite double (every binary float is a dyadic rational).
  static BigRational from_double(double value);

  const mpq_class& raw() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }
  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  BigRational abs() const;
  /// Integer power; negative exponents invert (ArithmeticError on 0^-k).
  BigRational pow(long exponent) const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational& lhs, const BigRational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& value);

}  // namespace eulercf
