#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "eulercf/engine.hpp"
#include "eulercf/error.hpp"
#include "eulercf/families.hpp"
#include "eulercf/oracles.hpp"

using namespace eulercf;

TEST_CASE("binomial_power") {
  CHECK(binomial_power(2, 1).value == 4.0);
  CHECK(binomial_power(-1, 0.5).value == doctest::Approx(2.0 / 3.0).epsilon(1e-16));
  const OracleResult root = binomial_power(0.5, 0.2);
  CHECK(root.value == doctest::Approx(1.0954451150103324).epsilon(1e-15));
  // Independent route: binomial series sum_k C(1/2, k) 0.2^k.
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= (0.5 - (k - 1)) / k * 0.2;
    sum += term;
  }
  CHECK(root.value == doctest::Approx(sum).epsilon(1e-15));
  CHECK_THROWS_AS(binomial_power(0.5, -1.0), DomainError);
}

TEST_CASE("symmetric_lhs") {
  CHECK(symmetric_lhs(2, 0.5).value == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(symmetric_lhs(3, 0.5).value == doctest::Approx(21.0 / 13.0).epsilon(1e-15));
  CHECK(symmetric_lhs(0.37, 0.0).value == 1.0);
  CHECK(symmetric_lhs(2, 1e-9).value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(symmetric_lhs(2, 1.0), DomainError);
  CHECK_THROWS_AS(symmetric_lhs(0, 0.5), DomainError);
}

TEST_CASE("symmetric_lhs is even in n") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> nd(-5, 5), zd(-0.9, 0.9);
  for (int i = 0; i < 200; ++i) {
    const double n = nd(rng), z = zd(rng);
    const double a = symmetric_lhs(n, z).value, b = symmetric_lhs(-n, z).value;
    CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("tan_lhs") {
  CHECK(tan_lhs(2, 0.5).value == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(tan_lhs(1, 0.8).value == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(tan_lhs(3, 0.2).value == doctest::Approx((0.6 - 0.008) / (1 - 0.12)).epsilon(1e-15));
  CHECK_THROWS_WITH_AS(tan_lhs(2, 1), "pole proximity", DomainError);
}

TEST_CASE("log_lhs") {
  CHECK(log_lhs(0).value == 0.0);
  const OracleResult l3 = log_lhs(0.5);
  CHECK(l3.value == doctest::Approx(1.0986122886681098).epsilon(1e-15));
  CHECK(l3.method == "log1p+series");
  CHECK(l3.est_error < 1e-14);
  const double e = std::numbers::e;
  CHECK(log_lhs((e - 1) / (e + 1)).value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_WITH_AS(log_lhs(1.0), "outside convergence domain", DomainError);
}

TEST_CASE("log_lhs dual routes agree up to the edge of the disc") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> depth(0.0, 6.0);
  for (int i = 0; i < 2000; ++i) {
    const double z = std::copysign(1.0 - std::pow(10.0, -depth(rng)), i % 2 ? 1.0 : -1.0);
    CAPTURE(z);
    CHECK_NOTHROW(log_lhs(z));
  }
}

TEST_CASE("vcoth_series") {
  CHECK(vcoth_series(0).value == 1.0);
  CHECK(vcoth_series(1).value == doctest::Approx(1.3130352854993312).epsilon(1e-15));
  CHECK(vcoth_series(-1).value == vcoth_series(1).value);
  CHECK(vcoth_series(1000).value == 1000.0);
  CHECK(vcoth_exponential(0) == 1.0);
  for (int i = -50; i <= 50; ++i) {
    const double v = 0.1 * i;
    const double s = vcoth_series(v).value;
    CHECK(std::abs(s - vcoth_exponential(v)) <= 1e-13 * std::max(1.0, std::abs(s)));
  }
}

TEST_CASE("arctan_oracle") {
  CHECK(arctan_oracle(0).value == 0.0);
  CHECK(arctan_oracle(1).value == doctest::Approx(std::numbers::pi / 4).epsilon(1e-16));
  CHECK(arctan_oracle(2).value == doctest::Approx(1.1071487177940904).epsilon(1e-15));
  CHECK(arctan_oracle(-1e6).value == doctest::Approx(-std::numbers::pi / 2 + 1e-6).epsilon(1e-15));
  CHECK(arctan_oracle(0.3).est_error < 1e-14);
}

TEST_CASE("near_tangent_pole") {
  CHECK(near_tangent_pole(std::numbers::pi / 2));
  CHECK(near_tangent_pole(-std::numbers::pi / 2 + 1e-7));
  CHECK(near_tangent_pole(5 * std::numbers::pi / 2));
  CHECK_FALSE(near_tangent_pole(1.5));
  CHECK_FALSE(near_tangent_pole(std::numbers::pi));
}

namespace {

// Every family against its own left member on 200 sampled points.
template <class Make>
void sweep(const char* name, Make make, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 200; ++i) {
    const Family<double> f = make(rng);
    const OracleResult ref = f.lhs();
    const EvalReport r = eval_adaptive(f.stream, 1e-15);
    const double allowed = std::max(1e-12, 10 * ref.est_error) * std::max(1.0, std::abs(ref.value));
    CHECK_MESSAGE(std::abs(r.value - ref.value) <= allowed, name << " sample " << i);
  }
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

TEST_CASE("oracles agree with their continued fractions across the accepted domains") {
  sweep("lagrange", [](auto& g) { return lagrange_binomial(uniform(g, -3, 3), uniform(g, -0.6, 2)); }, 1);
  sweep("uniform", [](auto& g) { return uniform_binomial(uniform(g, -3, 3), uniform(g, -0.6, 2)); }, 2);
  sweep("symmetric", [](auto& g) { return symmetric_ratio(uniform(g, -5, 5), uniform(g, -0.9, 0.9)); }, 3);
  sweep("tanmult", [](auto& g) {
    const double t = uniform(g, -2, 2);
    const double limit = 1.3 / std::abs(std::atan(t));
    return tan_multiple(uniform(g, -std::min(4.0, limit), std::min(4.0, limit)), t);
  }, 4);
  sweep("arctan", [](auto& g) { return arctan_cf(uniform(g, -10, 10)); }, 5);
  sweep("tan", [](auto& g) { return tan_cf(uniform(g, -1.3, 1.3)); }, 6);
  sweep("logcf", [](auto& g) { return atanh_log_cf(uniform(g, -0.95, 0.95)); }, 7);
  sweep("vcoth", [](auto& g) { return vcoth_cf(uniform(g, -5, 5)); }, 8);
}
