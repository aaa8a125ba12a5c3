#pragma once

// Maclaurin-series comparators used by the bench command to contrast CF
// depth with the number of series terms needed for the same accuracy.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eulercf/families.hpp"

namespace eulercf {

struct TaylorComparator {
  std::string name;
  /// False outside the series' disc of convergence.
  bool converges = true;
  /// k-th term of the series (k = 0, 1, ...).
  std::function<double(std::size_t)> term;
  /// Term count guaranteed by a remainder bound for an absolute error
  /// target; used when direct summation would take too long.
  std::function<std::optional<std::size_t>(double)> remainder_count;
};

/// Comparator for the family at its parameters, or nullopt when the family
/// has no standard Taylor comparator (symmetric, tanmult).
std::optional<TaylorComparator> taylor_comparator(const Family<double>& family);

struct TaylorCount {
  std::optional<std::size_t> terms;
  /// "summation", "remainder-bound", "diverges" or "cap".
  std::string method;
};

/// Smallest N with |sum_{k<N} term(k) - target| <= tol * max(1, |target|),
/// found by summation up to `cap` terms and by the remainder bound beyond.
TaylorCount taylor_terms_needed(const TaylorComparator& comparator, double target, double tol,
                                std::size_t cap = 2'000'000);

double taylor_sum(const TaylorComparator& comparator, std::size_t terms);

}  // namespace eulercf
