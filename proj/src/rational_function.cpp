#include "eulercf/rational_function.hpp"

#include <ostream>

#include "eulercf/error.hpp"

namespace eulercf {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) { normalize(); }

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  const Polynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  // Scale both sides so the joint coefficient list is a primitive integer
  // vector: content(num ++ den) = 1.
  std::vector<BigRational> joint = num_.coefficients();
  joint.insert(joint.end(), den_.coefficients().begin(), den_.coefficients().end());
  BigRational scale = Polynomial(std::move(joint)).content();
  if (den_.leading().sign() < 0) scale = -scale;
  const Polynomial inverse(BigRational(1) / scale);
  num_ *= inverse;
  den_ *= inverse;
}

BigRational RationalFunction::operator()(const BigRational& at) const {
  const BigRational d = den_(at);
  if (d.is_zero()) throw ArithmeticError("rational function evaluated at a pole");
  return num_(at) / d;
}

std::string RationalFunction::to_string(char var) const {
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw ArithmeticError("division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace eulercf
