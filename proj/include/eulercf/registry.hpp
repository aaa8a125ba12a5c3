#pragma once

// Runtime lookup of the eight CF families by their stable identifiers:
// lagrange, uniform, symmetric, tanmult, arctan, tan, logcf, vcoth.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eulercf/big_rational.hpp"
#include "eulercf/error.hpp"
#include "eulercf/families.hpp"

namespace eulercf {

/// Bad identifiers, missing or unknown parameters, malformed numbers.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct FamilyInfo {
  std::string_view id;
  std::vector<std::string_view> parameters;
  std::string_view left_member;
  /// Whether bench has a Taylor-series comparator for this family.
  bool has_taylor_comparator;
};

const std::vector<FamilyInfo>& family_registry();

/// Throws UsageError listing the valid identifiers.
const FamilyInfo& find_family(std::string_view id);

template <class T>
using ParameterMap = std::map<std::string, T, std::less<>>;

/// Builds the floating family. Parameter names must match the family's
/// arity exactly (UsageError otherwise); domain violations raise DomainError.
Family<double> make_family(std::string_view id, const ParameterMap<double>& params);

/// Exact counterpart of make_family.
Family<BigRational> make_exact_family(std::string_view id, const ParameterMap<BigRational>& params);

/// Parses "p/q" or a decimal to the nearest double.
double parse_real(std::string_view text);

}  // namespace eulercf
