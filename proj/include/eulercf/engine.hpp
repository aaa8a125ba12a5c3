#pragma once

// Generic continued-fraction machinery: convergent recurrences, backward
// (fixed-depth) evaluation, adaptive modified-Lentz evaluation, termination
// scanning and equivalence transformations. Works for floating scalars,
// BigRational and, where only ring operations are needed, Polynomial.

#include <cmath>
#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "eulercf/error.hpp"
#include "eulercf/scalar.hpp"
#include "eulercf/term_stream.hpp"

namespace eulercf {

inline constexpr std::size_t kDefaultMaxDepth = 500;

/// k-th convergent A_k / B_k. In floating mode A and B may have been
/// rescaled by a common power of two; only their ratio is meaningful.
template <class T>
struct Convergent {
  T numerator;
  T denominator;
  std::size_t index = 0;

  T value() const {
    if (scalar_traits<T>::is_exact_zero(denominator)) {
      throw ArithmeticError("indeterminate convergent");
    }
    return numerator / denominator;
  }
};

/// Convergents 0..depth by the three-term recurrence
///   A_k = b_k A_{k-1} + a_k A_{k-2},  B_k = b_k B_{k-1} + a_k B_{k-2}
/// seeded with A_{-1} = 1, B_{-1} = 0, A_0 = b_0, B_0 = 1.
/// Floating magnitudes above 2^512 trigger a common rescale by 2^-512.
template <class T>
std::vector<Convergent<T>> convergents(const TermStream<T>& stream, std::size_t depth) {
  std::vector<Convergent<T>> out;
  out.reserve(depth + 1);
  T a_prev = T(1), b_prev = T(0);
  T a_cur = stream.b0(), b_cur = T(1);
  out.push_back({a_cur, b_cur, 0});
  for (std::size_t k = 1; k <= depth; ++k) {
    const Term<T> t = stream.term(k);
    T a_next = t.b * a_cur + t.a * a_prev;
    T b_next = t.b * b_cur + t.a * b_prev;
    a_prev = std::move(a_cur);
    b_prev = std::move(b_cur);
    a_cur = std::move(a_next);
    b_cur = std::move(b_next);
    if constexpr (std::floating_point<T>) {
      const T limit = std::ldexp(T(1), 512);
      if (std::abs(a_cur) > limit || std::abs(b_cur) > limit) {
        a_cur = std::ldexp(a_cur, -512);
        b_cur = std::ldexp(b_cur, -512);
        a_prev = std::ldexp(a_prev, -512);
        b_prev = std::ldexp(b_prev, -512);
      }
    }
    out.push_back({a_cur, b_cur, k});
  }
  return out;
}

/// Smallest k <= scan_depth with a_k = 0 (exact test for exact scalars,
/// |a_k| <= 1e-300 for floating ones).
template <class T>
std::optional<std::size_t> detect_termination(const TermStream<T>& stream, std::size_t scan_depth) {
  for (std::size_t k = 1; k <= scan_depth; ++k) {
    if (scalar_traits<T>::is_negligible(stream.term(k).a)) return k;
  }
  return std::nullopt;
}

namespace detail {

// Depth past which nothing can change the value: levels beyond the first
// vanishing partial numerator are dead.
template <class T>
std::size_t live_depth(const TermStream<T>& stream, std::size_t depth) {
  if (depth == 0) return 0;
  if (const auto k = detect_termination(stream, depth)) return *k - 1;
  return depth;
}

}  // namespace detail

/// Backward evaluation of the depth-truncated CF (tail 0). Exact for
/// BigRational. Throws ArithmeticError("division by zero in backward pass")
/// when an intermediate denominator vanishes.
template <FieldScalar T>
T eval_fixed(const TermStream<T>& stream, std::size_t depth) {
  depth = detail::live_depth(stream, depth);
  if (depth == 0) return stream.b0();
  T tail = stream.term(depth).b;
  for (std::size_t j = depth - 1;; --j) {
    if (scalar_traits<T>::is_exact_zero(tail)) {
      throw ArithmeticError("division by zero in backward pass");
    }
    const T a = stream.term(j + 1).a;
    const T b = j == 0 ? stream.b0() : stream.term(j).b;
    tail = b + a / tail;
    if (j == 0) break;
  }
  return tail;
}

/// Division-free backward evaluation: returns (P, Q) with value P/Q.
/// Usable over any commutative ring, in particular Polynomial.
template <class T>
std::pair<T, T> eval_fixed_fraction(const TermStream<T>& stream, std::size_t depth) {
  depth = detail::live_depth(stream, depth);
  if (depth == 0) return {stream.b0(), T(1)};
  T p = stream.term(depth).b;
  T q = T(1);
  for (std::size_t j = depth - 1;; --j) {
    const T a = stream.term(j + 1).a;
    const T b = j == 0 ? stream.b0() : stream.term(j).b;
    T next = b * p + a * q;
    q = std::move(p);
    p = std::move(next);
    if (j == 0) break;
  }
  return {std::move(p), std::move(q)};
}

/// Outcome of adaptive evaluation.
struct EvalReport {
  double value = 0.0;
  std::size_t depth_used = 0;
  bool converged = false;
  bool terminated_finitely = false;
  std::optional<double> est_error;
};

struct AdaptiveOptions {
  /// Replacement for vanishing Lentz intermediates.
  double tiny = 1e-30;
  /// Below this |f_{k-1}| the stopping test switches to absolute change.
  double absolute_switch = 1e-10;
  /// Convergents beyond this magnitude that keep growing signal a pole.
  double pole_magnitude = 1e150;
  std::size_t pole_run = 4;
};

/// Modified Lentz evaluation. Stops when the relative change between
/// successive convergents is <= tol (absolute change when |f_{k-1}| is
/// below options.absolute_switch), or when a_k vanishes, in which case the
/// value is recomputed exactly by backward evaluation at depth k-1.
/// Throws ConvergenceError after max_depth steps and PoleError on
/// monotone blow-up.
template <std::floating_point T>
EvalReport eval_adaptive(const TermStream<T>& stream, T tol, std::size_t max_depth = kDefaultMaxDepth,
                         const AdaptiveOptions& options = {}) {
  if (!(tol > T(0))) throw DomainError("tolerance must be positive");
  if (max_depth < 1) throw DomainError("max_depth must be at least 1");
  const T tiny = static_cast<T>(options.tiny);

  T f = stream.b0();
  T prev = f;
  if (f == T(0)) f = tiny;
  T c = f;
  T d = T(0);
  T change = std::numeric_limits<T>::infinity();
  std::size_t growth = 0;

  for (std::size_t k = 1; k <= max_depth; ++k) {
    const Term<T> t = stream.term(k);
    if (scalar_traits<T>::is_negligible(t.a)) {
      EvalReport r;
      r.value = static_cast<double>(eval_fixed(stream, k - 1));
      r.depth_used = k - 1;
      r.converged = true;
      r.terminated_finitely = true;
      r.est_error = 0.0;
      return r;
    }
    d = t.b + t.a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = t.b + t.a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = T(1) / d;
    f *= c * d;

    change = std::abs(prev) < static_cast<T>(options.absolute_switch) ? std::abs(f - prev)
                                                                      : std::abs(f / prev - T(1));
    if (std::abs(f) > static_cast<T>(options.pole_magnitude) && std::abs(f) > std::abs(prev)) {
      if (++growth >= options.pole_run) throw PoleError("pole detected", k);
    } else {
      growth = 0;
    }
    if (change <= tol) {
      EvalReport r;
      r.value = static_cast<double>(f);
      r.depth_used = k;
      r.converged = true;
      r.est_error = static_cast<double>(change);
      return r;
    }
    prev = f;
  }
  throw ConvergenceError("not converged within max_depth", static_cast<double>(f),
                         static_cast<double>(change), max_depth);
}

/// Equivalence transformation with scale factors r_k (r_0 = 1):
///   a_k <- r_k r_{k-1} a_k,  b_k <- r_k b_k.
/// Every convergent value is preserved. A zero factor raises
/// ArithmeticError("zero scale factor") when the affected term is queried.
template <class T>
TermStream<T> equivalence_transform(const TermStream<T>& stream, std::function<T(std::size_t)> scale) {
  auto factor = [scale](std::size_t k) -> T {
    if (k == 0) return T(1);
    T r = scale(k);
    if (scalar_traits<T>::is_exact_zero(r)) throw ArithmeticError("zero scale factor");
    return r;
  };
  return TermStream<T>(stream.b0(), [stream, factor](std::size_t k) -> Term<T> {
    const Term<T> t = stream.term(k);
    const T rk = factor(k);
    return Term<T>{t.a * rk * factor(k - 1), t.b * rk};
  });
}

}  // namespace eulercf
