#include "eulercf/closed_form.hpp"

#include <cstdlib>
#include <string>

#include "eulercf/engine.hpp"
#include "eulercf/error.hpp"
#include "eulercf/families.hpp"

namespace eulercf {

namespace {

void check_exponent(int n, int bound) {
  if (n == 0) throw DomainError("exponent n must be a nonzero integer");
  if (std::abs(n) > bound) {
    throw DomainError("|n| = " + std::to_string(std::abs(n)) + " exceeds bound " + std::to_string(bound));
  }
}

Polynomial power(const Polynomial& base, int exponent) {
  Polynomial out(1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

Family<Polynomial> formal_family(ClosedFormFamily family, int n) {
  const Polynomial exponent{BigRational(n)};
  const Polynomial var = Polynomial::variable();
  switch (family) {
    case ClosedFormFamily::symmetric:
      return symmetric_ratio<Polynomial>(exponent, var);
    case ClosedFormFamily::tanmult:
      return tan_multiple<Polynomial>(exponent, var);
    case ClosedFormFamily::lagrange:
      return lagrange_binomial<Polynomial>(exponent, var);
    case ClosedFormFamily::uniform:
      return uniform_binomial<Polynomial>(exponent, var);
  }
  throw AlgebraError("unknown family");
}

}  // namespace

char variable_of(ClosedFormFamily family) {
  switch (family) {
    case ClosedFormFamily::symmetric:
      return 'z';
    case ClosedFormFamily::tanmult:
      return 't';
    default:
      return 'x';
  }
}

std::string_view name_of(ClosedFormFamily family) {
  switch (family) {
    case ClosedFormFamily::symmetric:
      return "symmetric";
    case ClosedFormFamily::tanmult:
      return "tanmult";
    case ClosedFormFamily::lagrange:
      return "lagrange";
    case ClosedFormFamily::uniform:
      return "uniform";
  }
  return "?";
}

RationalFunction cf_closed_form(ClosedFormFamily family, int n, int bound) {
  check_exponent(n, bound);
  const Family<Polynomial> f = formal_family(family, n);
  // Lagrange's interleaved CF is the slowest to halt, at 2|n| + 1.
  const auto scan = static_cast<std::size_t>(2 * std::abs(n) + 2);
  const auto k = detect_termination(f.stream, scan);
  if (!k) throw AlgebraError("no termination found for " + std::string(name_of(family)) + ", n = " + std::to_string(n));
  auto [num, den] = eval_fixed_fraction(f.stream, *k - 1);
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction lhs_closed_form(ClosedFormFamily family, int n, int bound) {
  check_exponent(n, bound);
  const int m = std::abs(n);
  const Polynomial var = Polynomial::variable();
  const Polynomial one(1);
  switch (family) {
    case ClosedFormFamily::symmetric: {
      const Polynomial plus = power(one + var, m);
      const Polynomial minus = power(one - var, m);
      const Polynomial nz = Polynomial(BigRational(n)) * var;
      if (n > 0) return RationalFunction(nz * (plus + minus), plus - minus);
      // (1+z)^-m (1-z^2)^m = (1-z)^m and symmetrically for (1-z)^-m.
      return RationalFunction(nz * (minus + plus), minus - plus);
    }
    case ClosedFormFamily::lagrange:
    case ClosedFormFamily::uniform: {
      const Polynomial p = power(one + var, m);
      return n > 0 ? RationalFunction(p) : RationalFunction(one, p);
    }
    case ClosedFormFamily::tanmult:
      break;
  }
  throw AlgebraError("no polynomial left member for " + std::string(name_of(family)));
}

bool check_negation_symmetry(int n, int bound) {
  if (n < 1) throw DomainError("negation symmetry is checked for positive n");
  return lhs_closed_form(ClosedFormFamily::symmetric, n, bound) ==
         lhs_closed_form(ClosedFormFamily::symmetric, -n, bound);
}

}  // namespace eulercf
