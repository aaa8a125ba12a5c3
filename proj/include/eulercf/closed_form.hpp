#pragma once

#include <string_view>

#include "eulercf/rational_function.hpp"

namespace eulercf {

/// Families whose CF terminates for every nonzero integer n.
enum class ClosedFormFamily { symmetric, tanmult, lagrange, uniform };

inline constexpr int kDefaultExponentBound = 24;

/// Formal argument letter used when rendering: z, t or x.
char variable_of(ClosedFormFamily family);
std::string_view name_of(ClosedFormFamily family);

/// The finite CF for integer n, evaluated symbolically in its argument by
/// exact backward recurrence from the termination index.
/// Throws DomainError for n = 0 or |n| > bound and AlgebraError("no
/// termination found") if no vanishing partial numerator shows up.
RationalFunction cf_closed_form(ClosedFormFamily family, int n, int bound = kDefaultExponentBound);

/// Binomial expansion of the left member: (1+x)^n for lagrange/uniform and
/// n z [(1+z)^n + (1-z)^n] / [(1+z)^n - (1-z)^n] for symmetric. Negative n
/// is cleared by multiplying through by (1-z^2)^|n| (resp. taking the
/// reciprocal of (1+x)^|n|). tanmult has no such form and throws
/// AlgebraError.
RationalFunction lhs_closed_form(ClosedFormFamily family, int n, int bound = kDefaultExponentBound);

/// Exact check that the symmetric left member is unchanged by n -> -n.
bool check_negation_symmetry(int n, int bound = kDefaultExponentBound);

}  // namespace eulercf
