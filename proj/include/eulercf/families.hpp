#pragma once

// Euler's continued fractions for binomial powers and their limiting forms,
// each bundled with its left member. All constructors are templates over the
// scalar type: double for numerics, BigRational for exact values, and
// Polynomial for symbolic terms in a formal argument.

#include <cmath>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulercf/error.hpp"
#include "eulercf/oracles.hpp"
#include "eulercf/scalar.hpp"
#include "eulercf/term_stream.hpp"

namespace eulercf {

template <class T>
struct Parameter {
  std::string name;
  T value;
};

template <class T>
struct Family {
  std::string name;
  std::vector<Parameter<T>> parameters;
  TermStream<T> stream;
  /// Left member at these parameters; empty for formal (symbolic) scalars.
  std::function<OracleResult()> lhs;

  const T& parameter(std::string_view key) const {
    for (const auto& p : parameters) {
      if (p.name == key) return p.value;
    }
    throw DomainError("family '" + name + "' has no parameter '" + std::string(key) + "'");
  }
};

namespace detail {

template <class T>
T integer(long v) {
  return scalar_traits<T>::from_int(v);
}

template <class T>
T ratio(long p, long q) {
  return scalar_traits<T>::from_ratio(p, q);
}

template <class T>
double as_double(const T& v) {
  return scalar_traits<T>::to_double(v);
}

template <class T>
bool abs_below_one(const T& v) {
  if constexpr (std::floating_point<T>) {
    return std::abs(v) < T(1);
  } else {
    return v.abs() < BigRational(1);
  }
}

template <class T>
void require_finite(const T& v, const char* what) {
  if constexpr (std::floating_point<T>) {
    if (!std::isfinite(v)) throw DomainError(std::string("domain: ") + what + " must be finite");
  }
}

}  // namespace detail

/// Symmetric-ratio stream written in s = z^2:
///   1 + (n^2-1)s/(3 + (n^2-4)s/(5 + ...)),  a_k = (n^2 - k^2) s, b_k = 2k+1.
template <class T>
TermStream<T> symmetric_ratio_stream(T n, T z_squared) {
  return TermStream<T>(detail::integer<T>(1), [n, s = std::move(z_squared)](std::size_t k) {
    const auto kk = static_cast<long>(k);
    return Term<T>{(n * n - detail::integer<T>(kk * kk)) * s, detail::integer<T>(2 * kk + 1)};
  });
}

/// Lagrange's interrupted CF for (1+x)^n:
///   1 + nx/(1 + (1-n)x/(2 + (1+n)x/(3 + (2-n)x/(2 + ...)))).
/// Terminates at k = 2n for positive integer n, k = 2|n|+1 for negative n.
template <class T>
Family<T> lagrange_binomial(T n, T x) {
  detail::require_finite(n, "n");
  detail::require_finite(x, "x");
  if constexpr (std::floating_point<T>) {
    if (!(x > T(-1))) throw DomainError("domain: lagrange family requires x > -1");
  }
  TermStream<T> stream(detail::integer<T>(1), [n, x](std::size_t k) {
    if (k == 1) return Term<T>{n * x, detail::integer<T>(1)};
    const auto j = static_cast<long>(k / 2);
    if (k % 2 == 0) return Term<T>{(detail::integer<T>(j) - n) * x, detail::integer<T>(2)};
    return Term<T>{(detail::integer<T>(j) + n) * x, detail::integer<T>(2 * j + 1)};
  });
  std::function<OracleResult()> lhs;
  if constexpr (!scalar_traits<T>::formal) {
    lhs = [n, x] { return binomial_power(detail::as_double(n), detail::as_double(x)); };
  }
  return {"lagrange", {{"n", n}, {"x", x}}, std::move(stream), std::move(lhs)};
}

/// Uniform-law CF for (1+x)^n:
///   b_1 = 1 + (1-n)x/2,  a_k = (n^2-(k-1)^2) x^2/4,  b_k = (2k-1)(1+x/2).
/// Throws DomainError("degenerate denominator") at x = -2.
template <class T>
Family<T> uniform_binomial(T n, T x) {
  detail::require_finite(n, "n");
  detail::require_finite(x, "x");
  if constexpr (!scalar_traits<T>::formal) {
    if (x == detail::integer<T>(-2)) throw DomainError("degenerate denominator");
  }
  const T half = detail::ratio<T>(1, 2);
  const T quarter = detail::ratio<T>(1, 4);
  const T x_half = x * half;
  const T x_sq_quarter = x * x * quarter;
  TermStream<T> stream(detail::integer<T>(1), [n, x, x_half, x_sq_quarter](std::size_t k) {
    const T one = detail::integer<T>(1);
    if (k == 1) return Term<T>{n * x, one + (one - n) * x_half};
    const auto m = static_cast<long>(k) - 1;
    return Term<T>{(n * n - detail::integer<T>(m * m)) * x_sq_quarter,
                   detail::integer<T>(2 * m + 1) * (one + x_half)};
  });
  std::function<OracleResult()> lhs;
  if constexpr (!scalar_traits<T>::formal) {
    lhs = [n, x] { return binomial_power(detail::as_double(n), detail::as_double(x)); };
  }
  return {"uniform", {{"n", n}, {"x", x}}, std::move(stream), std::move(lhs)};
}

/// 1 + (n^2-1)z^2/(3 + (n^2-4)z^2/(5 + ...)) with left member
/// n z [(1+z)^n + (1-z)^n] / [(1+z)^n - (1-z)^n]. At n = 0 the left member
/// is its limit 2z / log((1+z)/(1-z)); at z = 0 it is 1.
template <class T>
Family<T> symmetric_ratio(T n, T z) {
  detail::require_finite(n, "n");
  detail::require_finite(z, "z");
  if constexpr (std::floating_point<T>) {
    if (!(std::abs(z) < T(1))) throw DomainError("domain: symmetric family requires |z| < 1");
  } else if constexpr (!scalar_traits<T>::formal) {
    if (z.abs() == BigRational(1)) throw DomainError("domain: symmetric family requires z != +-1");
  }
  std::function<OracleResult()> lhs;
  if constexpr (!scalar_traits<T>::formal) {
    lhs = [n, z] {
      const double nd = detail::as_double(n);
      const double zd = detail::as_double(z);
      if (nd != 0.0) return symmetric_lhs(nd, zd);
      if (zd == 0.0) return OracleResult{1.0, "continuity", 0.0};
      const OracleResult l = log_lhs(zd);
      const double value = 2.0 * zd / l.value;
      return OracleResult{value, "log-limit", std::abs(value) * l.est_error / std::abs(l.value)};
    };
  }
  return {"symmetric", {{"n", n}, {"z", z}}, symmetric_ratio_stream<T>(n, z * z), std::move(lhs)};
}

/// tan(n phi) = n t/(1 - (n^2-1)t^2/(3 - (n^2-4)t^2/(5 - ...))), t = tan phi.
template <class T>
Family<T> tan_multiple(T n, T t) {
  detail::require_finite(n, "n");
  detail::require_finite(t, "t");
  if constexpr (!scalar_traits<T>::formal) {
    if (near_tangent_pole(detail::as_double(n) * std::atan(detail::as_double(t)))) {
      throw DomainError("pole proximity");
    }
  }
  const T t_sq = t * t;
  TermStream<T> stream(detail::integer<T>(0), [n, t, t_sq](std::size_t k) {
    if (k == 1) return Term<T>{n * t, detail::integer<T>(1)};
    const auto m = static_cast<long>(k) - 1;
    return Term<T>{-((n * n - detail::integer<T>(m * m)) * t_sq), detail::integer<T>(2 * m + 1)};
  });
  std::function<OracleResult()> lhs;
  if constexpr (!scalar_traits<T>::formal) {
    lhs = [n, t] { return tan_lhs(detail::as_double(n), detail::as_double(t)); };
  }
  return {"tanmult", {{"n", n}, {"t", t}}, std::move(stream), std::move(lhs)};
}

/// arctan t = t/(1 + t^2/(3 + 4t^2/(5 + 9t^2/(7 + ...)))).
template <class T>
Family<T> arctan_cf(T t) {
  detail::require_finite(t, "t");
  const T t_sq = t * t;
  TermStream<T> stream(detail::integer<T>(0), [t, t_sq](std::size_t k) {
    if (k == 1) return Term<T>{t, detail::integer<T>(1)};
    const auto m = static_cast<long>(k) - 1;
    return Term<T>{detail::integer<T>(m * m) * t_sq, detail::integer<T>(2 * m + 1)};
  });
  std::function<OracleResult()> lhs;
  if constexpr (!scalar_traits<T>::formal) {
    lhs = [t] { return arctan_oracle(detail::as_double(t)); };
  }
  return {"arctan", {{"t", t}}, std::move(stream), std::move(lhs)};
}

/// tan theta = theta/(1 - theta^2/(3 - theta^2/(5 - ...))).
template <class T>
Family<T> tan_cf(T theta) {
  detail::require_finite(theta, "theta");
  if constexpr (!scalar_traits<T>::formal) {
    if (near_tangent_pole(detail::as_double(theta))) throw DomainError("pole proximity");
  }
  const T theta_sq = theta * theta;
  TermStream<T> stream(detail::integer<T>(0), [theta, theta_sq](std::size_t k) {
    if (k == 1) return Term<T>{theta, detail::integer<T>(1)};
    return Term<T>{-theta_sq, detail::integer<T>(2 * static_cast<long>(k) - 1)};
  });
  std::function<OracleResult()> lhs;
  if constexpr (!scalar_traits<T>::formal) {
    lhs = [theta] { return tan_oracle(detail::as_double(theta)); };
  }
  return {"tan", {{"theta", theta}}, std::move(stream), std::move(lhs)};
}

/// log((1+z)/(1-z)) = 2z/(1 - z^2/(3 - 4z^2/(5 - ...))), |z| < 1.
template <class T>
Family<T> atanh_log_cf(T z) {
  detail::require_finite(z, "z");
  if constexpr (!scalar_traits<T>::formal) {
    if (!detail::abs_below_one(z)) throw DomainError("outside convergence domain");
  }
  const T z_sq = z * z;
  TermStream<T> stream(detail::integer<T>(0), [z, z_sq](std::size_t k) {
    if (k == 1) return Term<T>{detail::integer<T>(2) * z, detail::integer<T>(1)};
    const auto m = static_cast<long>(k) - 1;
    return Term<T>{-(detail::integer<T>(m * m) * z_sq), detail::integer<T>(2 * m + 1)};
  });
  std::function<OracleResult()> lhs;
  if constexpr (!scalar_traits<T>::formal) {
    lhs = [z] { return log_lhs(detail::as_double(z)); };
  }
  return {"logcf", {{"z", z}}, std::move(stream), std::move(lhs)};
}

/// v coth v = 1 + v^2/(3 + v^2/(5 + v^2/(7 + ...))).
template <class T>
Family<T> vcoth_cf(T v) {
  detail::require_finite(v, "v");
  const T v_sq = v * v;
  TermStream<T> stream(detail::integer<T>(1), [v_sq](std::size_t k) {
    return Term<T>{v_sq, detail::integer<T>(2 * static_cast<long>(k) + 1)};
  });
  std::function<OracleResult()> lhs;
  if constexpr (!scalar_traits<T>::formal) {
    lhs = [v] { return vcoth_series(detail::as_double(v)); };
  }
  return {"vcoth", {{"v", v}}, std::move(stream), std::move(lhs)};
}

}  // namespace eulercf
