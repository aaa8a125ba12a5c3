#pragma once

// Independent reference values for every left member. Wherever a value can
// be reached two ways (closed form and series) both routes are computed and
// an OracleError is raised if they disagree beyond the series bound.

#include <string>

namespace eulercf {

struct OracleResult {
  double value = 0.0;
  std::string method;
  double est_error = 0.0;
};

/// (1+x)^n. Repeated multiplication for integer n, exp(n log(1+x)) otherwise.
OracleResult binomial_power(double n, double x);

/// n z [(1+z)^n + (1-z)^n] / [(1+z)^n - (1-z)^n], with value 1 at z = 0.
/// Requires |z| < 1 and n != 0.
OracleResult symmetric_lhs(double n, double z);

/// tan(n arctan t). DomainError("pole proximity") within 1e-6 of a pole.
OracleResult tan_lhs(double n, double t);

/// tan(theta) with the same pole guard.
OracleResult tan_oracle(double theta);

/// log((1+z)/(1-z)) by log1p and by the odd series 2(z + z^3/3 + ...).
OracleResult log_lhs(double z);

/// Even factorial series ratio cosh(v) / (sinh(v)/v), cross-checked against
/// v (e^{2v}+1)/(e^{2v}-1).
OracleResult vcoth_series(double v);

/// The exponential form v (e^{2v}+1)/(e^{2v}-1) alone (1 at v = 0).
double vcoth_exponential(double v);

/// arctan via std::atan, cross-checked by a half-angle reduced alternating
/// series.
OracleResult arctan_oracle(double t);

/// True when angle lies within `guard` of an odd multiple of pi/2.
bool near_tangent_pole(double angle, double guard = 1e-6);

}  // namespace eulercf
