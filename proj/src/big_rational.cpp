#include "eulercf/big_rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "eulercf/error.hpp"

namespace eulercf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw DomainError("not an integer: '" + std::string(text) + "'");
  mpz_class out(std::string(digits), 10);
  if (text.front() == '-') out = -out;
  return out;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

BigRational parse_decimal(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const auto exp_text = text.substr(e + 1);
    const mpz_class exp_value = parse_integer(exp_text);
    if (!exp_value.fits_slong_p() || abs(exp_value) > 10000) {
      throw DomainError("exponent out of range: '" + original + "'");
    }
    exponent = exp_value.get_si();
    text = text.substr(0, e);
  }
  std::string digits;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw DomainError("not a number: '" + original + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(text)) throw DomainError("not a number: '" + original + "'");
    digits = std::string(text);
  }
  mpq_class value{mpz_class(digits, 10)};
  if (exponent > 0) value *= pow10(static_cast<unsigned long>(exponent));
  if (exponent < 0) value /= pow10(static_cast<unsigned long>(-exponent));
  value.canonicalize();
  return BigRational(negative ? mpq_class(-value) : value);
}

}  // namespace

BigRational::BigRational(long num, long den) {
  if (den == 0) throw ArithmeticError("division by zero");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

BigRational BigRational::parse(std::string_view text) {
  if (text.empty()) throw DomainError("empty number");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash));
    const mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ArithmeticError("division by zero");
    return BigRational(mpq_class(num, den));
  }
  return parse_decimal(text);
}

BigRational BigRational::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite value has no rational form");
  return BigRational(mpq_class(value));
}

std::string BigRational::to_string() const { return value_.get_str(10); }

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(value_))); }

BigRational BigRational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw ArithmeticError("division by zero");
    return BigRational(1) / pow(-exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return BigRational(mpq_class(num, den));
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) {
  return os << value.to_string();
}

}  // namespace eulercf
