#include "eulercf/oracles.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>

#include "eulercf/error.hpp"

namespace eulercf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSeriesStop = 1e-18;
constexpr std::size_t kSeriesCap = 1'000'000;

bool is_integral(double n) { return std::isfinite(n) && std::nearbyint(n) == n; }

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string("domain: ") + what + " must be finite");
}

// Odd atanh series 2(z + z^3/3 + ...) with a geometric tail bound.
struct SeriesSum {
  double value;
  double bound;
  bool complete;
};

SeriesSum atanh_log_series(double z) {
  const double z2 = z * z;
  double power = z;
  double sum = 0.0;
  double carry = 0.0;  // Kahan compensation
  for (std::size_t k = 0; k < kSeriesCap; ++k) {
    const double term = power / static_cast<double>(2 * k + 1) - carry;
    const double t = sum + term;
    carry = (t - sum) - term;
    sum = t;
    power *= z2;
    const double next = power / static_cast<double>(2 * k + 3);
    if (std::abs(next) <= kSeriesStop * std::abs(sum)) {
      // Truncated tail plus the drift of the repeated power products.
      const double drift = kEps * std::abs(z) / (1.0 - z2);
      return {2.0 * sum, 2.0 * (std::abs(next) / (1.0 - z2) + drift), true};
    }
  }
  return {2.0 * sum, std::numeric_limits<double>::infinity(), false};
}

// Alternating Maclaurin series of arctan after half-angle reduction.
SeriesSum arctan_series(double t) {
  double base = 0.0;
  double u = t;
  if (std::abs(u) > 1.0) {
    base = std::copysign(std::numbers::pi / 2, u);
    u = -1.0 / u;
  }
  int halvings = 0;
  while (std::abs(u) > 0.125) {
    u = u / (1.0 + std::sqrt(1.0 + u * u));
    ++halvings;
  }
  const double u2 = u * u;
  double power = u;
  double sum = 0.0;
  double first_omitted = 0.0;
  for (std::size_t k = 0;; ++k) {
    const double term = power / static_cast<double>(2 * k + 1);
    sum += (k % 2 == 0) ? term : -term;
    power *= u2;
    first_omitted = std::abs(power) / static_cast<double>(2 * k + 3);
    if (first_omitted <= 1e-20 || power == 0.0) break;
  }
  const double scale = std::ldexp(1.0, halvings);
  return {base + scale * sum, scale * first_omitted, true};
}

}  // namespace

bool near_tangent_pole(double angle, double guard) {
  const double offset = std::remainder(angle - std::numbers::pi / 2, std::numbers::pi);
  return std::abs(offset) <= guard;
}

OracleResult binomial_power(double n, double x) {
  require_finite(n, "n");
  require_finite(x, "x");
  if (!(1.0 + x > 0.0)) throw DomainError("domain: binomial oracle requires 1 + x > 0");
  if (is_integral(n) && std::abs(n) <= 4096) {
    const long m = std::labs(static_cast<long>(n));
    double p = 1.0;
    for (long i = 0; i < m; ++i) p *= 1.0 + x;
    const double value = n < 0 ? 1.0 / p : p;
    return {value, "repeated-multiplication", std::abs(value) * kEps * static_cast<double>(m + 2)};
  }
  const double exponent = n * std::log1p(x);
  const double value = std::exp(exponent);
  return {value, "exp-log1p", std::abs(value) * kEps * (2.0 + std::abs(exponent))};
}

OracleResult symmetric_lhs(double n, double z) {
  require_finite(n, "n");
  require_finite(z, "z");
  if (!(std::abs(z) < 1.0)) throw DomainError("domain: symmetric left member requires |z| < 1");
  if (n == 0.0) throw DomainError("domain: symmetric left member requires n != 0");
  if (z == 0.0) return {1.0, "continuity", 0.0};
  // With w = ((1+z)/(1-z))^n the ratio is n z (w+1)/(w-1) = n z / tanh(n L / 2).
  const double log_ratio = std::log1p(z) - std::log1p(-z);
  const double half = 0.5 * n * log_ratio;
  const double value = n * z / std::tanh(half);
  return {value, "tanh-form", std::abs(value) * kEps * (8.0 + std::abs(half))};
}

OracleResult tan_lhs(double n, double t) {
  require_finite(n, "n");
  require_finite(t, "t");
  const double angle = n * std::atan(t);
  if (near_tangent_pole(angle)) throw DomainError("pole proximity");
  const double value = std::tan(angle);
  return {value, "tan-of-multiple-angle", kEps * (1.0 + value * value) * (1.0 + std::abs(angle))};
}

OracleResult tan_oracle(double theta) {
  require_finite(theta, "theta");
  if (near_tangent_pole(theta)) throw DomainError("pole proximity");
  const double value = std::tan(theta);
  return {value, "tan", kEps * (1.0 + value * value) * (1.0 + std::abs(theta))};
}

OracleResult log_lhs(double z) {
  require_finite(z, "z");
  if (!(std::abs(z) < 1.0)) throw DomainError("outside convergence domain");
  if (z == 0.0) return {0.0, "log1p+series", 0.0};
  const double value = std::log1p(z) - std::log1p(-z);
  const double rounding = 8.0 * kEps * std::abs(value);
  const SeriesSum series = atanh_log_series(z);
  if (!series.complete) return {value, "log1p", rounding};
  if (std::abs(series.value - value) > series.bound + rounding + 1e-15 * std::abs(value)) {
    throw OracleError("internal oracle disagreement: log1p vs atanh series");
  }
  return {value, "log1p+series", series.bound + rounding};
}

double vcoth_exponential(double v) {
  require_finite(v, "v");
  if (v == 0.0) return 1.0;
  if (std::abs(v) > 300.0) return std::abs(v);
  const double e = std::expm1(2.0 * v);
  return v * (e + 2.0) / e;
}

OracleResult vcoth_series(double v) {
  require_finite(v, "v");
  if (v == 0.0) return {1.0, "series-ratio", 0.0};
  const double closed = vcoth_exponential(v);
  // Past |v| ~ 300 the factorial series overflow; the closed form is |v|
  // to full precision there.
  if (std::abs(v) > 300.0) return {closed, "exponential", kEps * closed};

  const double s = v * v;
  double num = 1.0, den = 1.0;
  double tn = 1.0, td = 1.0;
  std::size_t k = 1;
  for (;; ++k) {
    const double kk = static_cast<double>(k);
    tn *= s / ((2 * kk - 1) * (2 * kk));
    td *= s / ((2 * kk) * (2 * kk + 1));
    num += tn;
    den += td;
    if (tn <= kSeriesStop * num && td <= kSeriesStop * den) break;
  }
  // Past this point successive term ratios are below 1/2, so each tail is
  // at most twice the next term.
  const double kk = static_cast<double>(k + 1);
  const double next_n = tn * s / ((2 * kk - 1) * (2 * kk));
  const double next_d = td * s / ((2 * kk) * (2 * kk + 1));
  const double value = num / den;
  const double est = std::abs(value) * (2.0 * next_n / num + 2.0 * next_d / den + 4.0 * kEps);
  if (std::abs(value - closed) > 1e-13 * std::max(1.0, std::abs(value))) {
    throw OracleError("internal oracle disagreement: series ratio vs exponential form");
  }
  return {value, "series-ratio", est};
}

OracleResult arctan_oracle(double t) {
  require_finite(t, "t");
  if (t == 0.0) return {0.0, "atan+series", 0.0};
  const double value = std::atan(t);
  const SeriesSum series = arctan_series(t);
  const double rounding = 16.0 * kEps * std::max(1.0, std::abs(value));
  if (std::abs(series.value - value) > series.bound + rounding) {
    throw OracleError("internal oracle disagreement: atan vs reduced series");
  }
  return {value, "atan+series", series.bound + rounding};
}

}  // namespace eulercf
