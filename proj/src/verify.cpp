#include "eulercf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "eulercf/closed_form.hpp"
#include "eulercf/engine.hpp"
#include "eulercf/families.hpp"
#include "eulercf/number_format.hpp"
#include "eulercf/oracles.hpp"
#include "eulercf/registry.hpp"

namespace eulercf {

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<BigRational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

// Closed forms displayed for n = +-1, +-2, +-3 and for tan 2phi, tan 3phi.
std::optional<RationalFunction> displayed_symmetric_form(int n) {
  switch (std::abs(n)) {
    case 1:
      return RationalFunction(poly({1}));
    case 2:
      return RationalFunction(poly({1, 0, 1}));
    case 3:
      return RationalFunction(poly({3, 0, 9}), poly({3, 0, 1}));
    default:
      return std::nullopt;
  }
}

std::optional<RationalFunction> displayed_tangent_form(int n) {
  if (n == 2) return RationalFunction(poly({0, 2}), poly({1, 0, -1}));
  if (n == 3) return RationalFunction(poly({0, 3, 0, -1}), poly({1, 0, -3}));
  return std::nullopt;
}

BigRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-60, 60), den(1, 60);
  return BigRational(num(rng), den(rng));
}

SuiteReport integer_n(int bound) {
  SuiteReport report{"integer-n", {}};
  for (int m = 1; m <= bound; ++m) {
    for (int n : {m, -m}) {
      const RationalFunction cf = cf_closed_form(ClosedFormFamily::symmetric, n);
      const RationalFunction lhs = lhs_closed_form(ClosedFormFamily::symmetric, n);
      bool ok = cf == lhs;
      std::string detail = "cf=" + cf.to_string('z') + " lhs=" + lhs.to_string('z');
      if (const auto shown = displayed_symmetric_form(n)) {
        ok = ok && cf == *shown;
        detail += " displayed=" + shown->to_string('z');
      }
      report.cases.push_back({"n=" + std::to_string(n), ok, detail});
    }
  }
  return report;
}

SuiteReport negation(int bound) {
  SuiteReport report{"negation", {}};
  for (int n = 1; n <= bound; ++n) {
    const RationalFunction pos = lhs_closed_form(ClosedFormFamily::symmetric, n);
    const RationalFunction neg = lhs_closed_form(ClosedFormFamily::symmetric, -n);
    report.cases.push_back({"n=" + std::to_string(n), check_negation_symmetry(n),
                            "lhs(n)=" + pos.to_string('z') + " lhs(-n)=" + neg.to_string('z')});
  }
  return report;
}

SuiteReport tangent_closed_forms(int bound, std::uint64_t seed) {
  SuiteReport report{"tangent-closed-forms", {}};
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= bound; ++n) {
    const RationalFunction cf = cf_closed_form(ClosedFormFamily::tanmult, n);
    bool ok = true;
    std::string detail = "cf=" + cf.to_string('t');
    if (const auto shown = displayed_tangent_form(n)) {
      ok = cf == *shown;
      detail += " displayed=" + shown->to_string('t');
    }
    // Tangent addition T_m = (T_{m-1} + t)/(1 - t T_{m-1}) carried as p/q.
    for (int i = 0; i < 20 && ok; ++i) {
      const BigRational t = random_rational(rng);
      BigRational p = t, q(1);
      for (int m = 2; m <= n; ++m) {
        BigRational np = p + t * q;
        q = q - t * p;
        p = std::move(np);
      }
      if (cf.numerator()(t) * q != cf.denominator()(t) * p) {
        ok = false;
        detail += " mismatch at t=" + t.to_string();
      }
    }
    report.cases.push_back({"n=" + std::to_string(n), ok, detail});
  }
  return report;
}

SuiteReport variable_change() {
  SuiteReport report{"variable-change", {}};
  const std::pair<const char*, double> exponents[] = {{"1/2", 0.5}, {"5/2", 2.5}, {"-3/2", -1.5}};
  const std::pair<const char*, double> arguments[] = {{"1/5", 0.2}, {"1/3", 1.0 / 3}, {"1/2", 0.5}};
  for (const auto& [n_text, n] : exponents) {
    for (const auto& [x_text, x] : arguments) {
      const double target = binomial_power(n, x).value;
      const double lagrange = eval_adaptive(lagrange_binomial(n, x).stream, 1e-15).value;
      const double uniform = eval_adaptive(uniform_binomial(n, x).stream, 1e-15).value;
      const double z = x / (2 + x);
      const double sym = eval_adaptive(symmetric_ratio(n, z).stream, 1e-15).value;
      // CF = n z (w+1)/(w-1) with w = ((1+z)/(1-z))^n = (1+x)^n.
      const double recovered = (sym + n * z) / (sym - n * z);
      auto close = [target](double v) { return std::abs(v - target) <= 1e-12 * std::abs(target); };
      const bool ok = close(lagrange) && close(uniform) && close(recovered);
      report.cases.push_back({std::string("n=") + n_text + " x=" + x_text, ok,
                              "target=" + format_double(target) + " lagrange=" + format_double(lagrange) +
                                  " uniform=" + format_double(uniform) + " symmetric=" + format_double(recovered)});
    }
  }
  return report;
}

SuiteReport series_xiv(std::uint64_t seed) {
  SuiteReport report{"series-xiv", {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    const double v = dist(rng);
    const double closed = vcoth_exponential(v);
    CaseResult c{"v=" + format_double(v), false, ""};
    try {
      const double series = vcoth_series(v).value;
      c.passed = std::abs(series - closed) <= 1e-13 * std::max(1.0, std::abs(series));
      c.detail = "series=" + format_double(series) + " exponential=" + format_double(closed);
    } catch (const OracleError& e) {
      c.detail = e.what();
    }
    report.cases.push_back(std::move(c));
  }
  return report;
}

}  // namespace

bool SuiteReport::all_passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; });
}

const CaseResult* SuiteReport::first_failure() const {
  for (const auto& c : cases) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"integer-n", "negation", "tangent-closed-forms",
                                                   "variable-change", "series-xiv"};
  return names;
}

SuiteReport run_suite(std::string_view suite, int bound, std::uint64_t seed) {
  if (bound < 1 || bound > kMaxVerifyBound) {
    throw UsageError("bound must be between 1 and " + std::to_string(kMaxVerifyBound));
  }
  if (suite == "integer-n") return integer_n(bound);
  if (suite == "negation") return negation(bound);
  if (suite == "tangent-closed-forms") return tangent_closed_forms(bound, seed);
  if (suite == "variable-change") return variable_change();
  if (suite == "series-xiv") return series_xiv(seed);
  std::string valid;
  for (auto name : suite_names()) valid += (valid.empty() ? "" : ", ") + std::string(name);
  throw UsageError("unknown suite '" + std::string(suite) + "' (valid: " + valid + ")");
}

}  // namespace eulercf
