#pragma once

#include <cmath>
#include <concepts>

#include "eulercf/big_rational.hpp"
#include "eulercf/polynomial.hpp"

namespace eulercf {

/// Per-scalar hooks the generic CF code needs. `exact` scalars use exact
/// zero tests; floating scalars treat |v| <= 1e-300 as zero when scanning
/// for finite termination.
template <class T>
struct scalar_traits;

template <std::floating_point T>
struct scalar_traits<T> {
  static constexpr bool exact = false;
  static constexpr bool formal = false;
  static constexpr T zero_threshold = T(1e-300);

  static T from_int(long v) { return static_cast<T>(v); }
  static T from_ratio(long p, long q) { return static_cast<T>(p) / static_cast<T>(q); }
  static bool is_exact_zero(const T& v) { return v == T(0); }
  static bool is_negligible(const T& v) { return std::abs(v) <= zero_threshold; }
  static double to_double(const T& v) { return static_cast<double>(v); }
};

template <>
struct scalar_traits<BigRational> {
  static constexpr bool exact = true;
  static constexpr bool formal = false;

  static BigRational from_int(long v) { return BigRational(v); }
  static BigRational from_ratio(long p, long q) { return BigRational(p, q); }
  static bool is_exact_zero(const BigRational& v) { return v.is_zero(); }
  static bool is_negligible(const BigRational& v) { return v.is_zero(); }
  static double to_double(const BigRational& v) { return v.to_double(); }
};

/// Polynomials act as formal scalars: terms are generated symbolically in
/// the variable and only ring operations are available.
template <>
struct scalar_traits<Polynomial> {
  static constexpr bool exact = true;
  static constexpr bool formal = true;

  static Polynomial from_int(long v) { return Polynomial(BigRational(v)); }
  static Polynomial from_ratio(long p, long q) { return Polynomial(BigRational(p, q)); }
  static bool is_exact_zero(const Polynomial& v) { return v.is_zero(); }
  static bool is_negligible(const Polynomial& v) { return v.is_zero(); }
};

/// Scalars with exact or floating division (everything but formal ones).
template <class T>
concept FieldScalar = !scalar_traits<T>::formal;

}  // namespace eulercf
