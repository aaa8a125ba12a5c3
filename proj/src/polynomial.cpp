#include "eulercf/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "eulercf/error.hpp"

namespace eulercf {

Polynomial::Polynomial(BigRational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::variable() { return monomial(BigRational(1), 1); }

Polynomial Polynomial::monomial(BigRational coefficient, std::size_t degree) {
  if (coefficient.is_zero()) return {};
  std::vector<BigRational> c(degree + 1);
  c[degree] = std::move(coefficient);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational Polynomial::coefficient(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : BigRational();
}

BigRational Polynomial::leading() const { return coeffs_.empty() ? BigRational() : coeffs_.back(); }

BigRational Polynomial::operator()(const BigRational& at) const {
  BigRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

BigRational Polynomial::content() const {
  if (is_zero()) return {};
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& c : coeffs_) {
    if (c.is_zero()) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  return BigRational(mpq_class(num_gcd, den_lcm));
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return {};
  const BigRational c = content();
  Polynomial out = *this;
  for (auto& coeff : out.coeffs_) coeff /= c;
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const BigRational lc = leading();
  Polynomial out = *this;
  for (auto& coeff : out.coeffs_) coeff /= lc;
  return out;
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const BigRational& c = coeffs_[d];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const BigRational mag = c.abs();
    if (d == 0) {
      os << mag;
      continue;
    }
    if (mag != BigRational(1)) {
      if (mag.is_integer()) {
        os << mag;
      } else {
        os << '(' << mag << ')';
      }
    }
    os << var;
    if (d > 1) os << '^' << d;
  }
  return os.str();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw ArithmeticError("division by zero polynomial");
  std::vector<BigRational> rem = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Polynomial(), dividend};
  std::vector<BigRational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  const BigRational& lc = d.back();
  for (int i = dividend.degree(); i >= dd; --i) {
    const BigRational& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    const BigRational factor = top / lc;
    const auto shift = static_cast<std::size_t>(i - dd);
    quot[shift] = factor;
    for (std::size_t j = 0; j < d.size(); ++j) rem[shift + j] -= factor * d[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial pseudo_remainder(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw ArithmeticError("division by zero polynomial");
  const int dq = q.degree();
  if (p.degree() < dq) return p;
  const BigRational lc = q.leading();
  Polynomial r = p;
  int steps = p.degree() - dq + 1;
  while (!r.is_zero() && r.degree() >= dq) {
    const Polynomial shifted = Polynomial::monomial(r.leading(), static_cast<std::size_t>(r.degree() - dq));
    r = Polynomial(lc) * r - shifted * q;
    --steps;
  }
  // Keep the classical normalization lc^(deg p - deg q + 1) even when the
  // loop exits early on a vanishing intermediate.
  if (steps > 0) r *= Polynomial(lc.pow(steps));
  return r;
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw AlgebraError("gcd of two zero polynomials");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  Polynomial a = p.primitive_part();
  Polynomial b = q.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.primitive_part();
  }
  return a.monic();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace eulercf
