#include "eulercf/taylor.hpp"

#include <cmath>
#include <memory>
#include <numbers>

namespace eulercf {

namespace {

constexpr std::size_t kCoefficientCap = 4000;

// Smallest N in [lo, ...) with bound(N) <= tol, by doubling then bisection.
std::optional<std::size_t> first_below(const std::function<double(double)>& bound, double tol, std::size_t lo) {
  double hi = static_cast<double>(lo) + 1;
  while (bound(hi) > tol) {
    hi *= 2;
    if (hi > 1e18) return std::nullopt;
  }
  double low = static_cast<double>(lo);
  while (hi - low > 1) {
    const double mid = std::floor((low + hi) / 2);
    (bound(mid) > tol ? low : hi) = mid;
  }
  return static_cast<std::size_t>(hi);
}

// Coefficients c_j of tan x = sum c_j x^(2j+1), from tan' = 1 + tan^2:
// (2j+1) c_j = [j == 0] + sum_{i<j} c_i c_{j-1-i}.
std::vector<double> tan_coefficients() {
  std::vector<double> c;
  for (std::size_t j = 0; j < kCoefficientCap; ++j) {
    double acc = j == 0 ? 1.0 : 0.0;
    for (std::size_t i = 0; i + 1 <= j; ++i) acc += c[i] * c[j - 1 - i];
    c.push_back(acc / static_cast<double>(2 * j + 1));
    if (c.back() == 0.0) break;
  }
  return c;
}

// Coefficients of v coth v in s = v^2, from cosh v = (sinh v / v)(v coth v).
std::vector<double> vcoth_coefficients() {
  std::vector<double> even(kCoefficientCap), odd(kCoefficientCap);  // 1/(2k)!, 1/(2k+1)!
  even[0] = 1.0;
  odd[0] = 1.0;
  for (std::size_t k = 1; k < kCoefficientCap; ++k) {
    const double kk = static_cast<double>(k);
    even[k] = even[k - 1] / ((2 * kk - 1) * (2 * kk));
    odd[k] = odd[k - 1] / ((2 * kk) * (2 * kk + 1));
  }
  std::vector<double> c;
  for (std::size_t k = 0; k < kCoefficientCap; ++k) {
    double acc = even[k];
    for (std::size_t i = 0; i < k; ++i) acc -= c[i] * odd[k - i];
    c.push_back(acc);
    if (std::abs(acc) < 1e-300) break;
  }
  return c;
}

template <class Coefficients>
std::function<double(std::size_t)> power_series(std::shared_ptr<const Coefficients> c, double x, double step,
                                                 double shift) {
  // term(k) = c_k * x^(shift + step*k)
  return [c, x, step, shift](std::size_t k) {
    if (k >= c->size()) return 0.0;
    return (*c)[k] * std::pow(x, shift + step * static_cast<double>(k));
  };
}

}  // namespace

std::optional<TaylorComparator> taylor_comparator(const Family<double>& family) {
  const std::string& id = family.name;
  TaylorComparator cmp;
  if (id == "logcf") {
    const double z = family.parameter("z");
    cmp.name = "atanh series 2(z + z^3/3 + ...)";
    cmp.term = [z](std::size_t k) {
      return 2.0 * std::pow(z, static_cast<double>(2 * k + 1)) / static_cast<double>(2 * k + 1);
    };
    cmp.remainder_count = [z](double tol) {
      const double z2 = z * z;
      return first_below(
          [z, z2](double n) { return 2.0 * std::pow(std::abs(z), 2 * n + 1) / ((2 * n + 1) * (1 - z2)); }, tol, 0);
    };
    return cmp;
  }
  if (id == "arctan") {
    const double t = family.parameter("t");
    cmp.name = "arctan series t - t^3/3 + ...";
    cmp.converges = std::abs(t) <= 1.0;
    cmp.term = [t](std::size_t k) {
      const double v = std::pow(t, static_cast<double>(2 * k + 1)) / static_cast<double>(2 * k + 1);
      return k % 2 == 0 ? v : -v;
    };
    // Alternating series: the first omitted term bounds the error.
    cmp.remainder_count = [t](double tol) {
      return first_below([t](double n) { return std::pow(std::abs(t), 2 * n + 1) / (2 * n + 1); }, tol, 0);
    };
    return cmp;
  }
  if (id == "tan") {
    const double theta = family.parameter("theta");
    static const auto coefficients = std::make_shared<const std::vector<double>>(tan_coefficients());
    cmp.name = "tan series theta + theta^3/3 + 2 theta^5/15 + ...";
    cmp.converges = std::abs(theta) < std::numbers::pi / 2;
    cmp.term = power_series(coefficients, theta, 2.0, 1.0);
    return cmp;
  }
  if (id == "vcoth") {
    const double v = family.parameter("v");
    static const auto coefficients = std::make_shared<const std::vector<double>>(vcoth_coefficients());
    cmp.name = "v coth v series 1 + v^2/3 - v^4/45 + ...";
    cmp.converges = std::abs(v) < std::numbers::pi;
    cmp.term = power_series(coefficients, v, 2.0, 0.0);
    return cmp;
  }
  if (id == "lagrange" || id == "uniform") {
    const double n = family.parameter("n");
    const double x = family.parameter("x");
    const bool polynomial = n >= 0 && std::nearbyint(n) == n;
    cmp.name = "binomial series sum C(n,k) x^k";
    cmp.converges = polynomial || std::abs(x) < 1.0;
    // Terms C(n,k) x^k by the ratio recurrence, cached so that sequential
    // summation stays linear.
    auto cache = std::make_shared<std::vector<double>>(1, 1.0);
    cmp.term = [n, x, cache](std::size_t k) {
      while (cache->size() <= k) {
        const double i = static_cast<double>(cache->size() - 1);
        cache->push_back(cache->back() * (n - i) / (i + 1) * x);
      }
      return (*cache)[k];
    };
    return cmp;
  }
  return std::nullopt;
}

TaylorCount taylor_terms_needed(const TaylorComparator& comparator, double target, double tol, std::size_t cap) {
  if (!comparator.converges) return {std::nullopt, "diverges"};
  const double allowed = tol * std::max(1.0, std::abs(target));
  double sum = 0.0;
  for (std::size_t k = 0; k < cap; ++k) {
    sum += comparator.term(k);
    if (std::abs(sum - target) <= allowed) return {k + 1, "summation"};
  }
  if (comparator.remainder_count) {
    if (auto n = comparator.remainder_count(allowed)) return {*n, "remainder-bound"};
  }
  return {std::nullopt, "cap"};
}

double taylor_sum(const TaylorComparator& comparator, std::size_t terms) {
  double sum = 0.0;
  for (std::size_t k = 0; k < terms; ++k) sum += comparator.term(k);
  return sum;
}

}  // namespace eulercf
