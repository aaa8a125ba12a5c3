#include "eulercf/registry.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace eulercf {

namespace {

std::string join(const std::vector<std::string_view>& items) {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) os << (i ? ", " : "") << items[i];
  return os.str();
}

template <class T>
void check_arity(const FamilyInfo& info, const ParameterMap<T>& params) {
  for (const auto& [name, value] : params) {
    bool known = false;
    for (auto p : info.parameters) known = known || p == name;
    if (!known) {
      throw UsageError("unknown parameter '" + name + "' for family " + std::string(info.id) +
                       " (expected: " + join(info.parameters) + ")");
    }
  }
  for (auto p : info.parameters) {
    if (params.find(p) == params.end()) {
      throw UsageError("missing parameter '" + std::string(p) + "' for family " + std::string(info.id) +
                       " (expected: " + join(info.parameters) + ")");
    }
  }
}

template <class T>
Family<T> build(std::string_view id, const ParameterMap<T>& params) {
  const FamilyInfo& info = find_family(id);
  check_arity(info, params);
  auto get = [&](std::string_view key) -> const T& { return params.find(key)->second; };
  if (id == "lagrange") return lagrange_binomial<T>(get("n"), get("x"));
  if (id == "uniform") return uniform_binomial<T>(get("n"), get("x"));
  if (id == "symmetric") return symmetric_ratio<T>(get("n"), get("z"));
  if (id == "tanmult") return tan_multiple<T>(get("n"), get("t"));
  if (id == "arctan") return arctan_cf<T>(get("t"));
  if (id == "tan") return tan_cf<T>(get("theta"));
  if (id == "logcf") return atanh_log_cf<T>(get("z"));
  return vcoth_cf<T>(get("v"));
}

}  // namespace

const std::vector<FamilyInfo>& family_registry() {
  static const std::vector<FamilyInfo> registry{
      {"lagrange", {"n", "x"}, "(1+x)^n", true},
      {"uniform", {"n", "x"}, "(1+x)^n", true},
      {"symmetric", {"n", "z"}, "n z [(1+z)^n + (1-z)^n] / [(1+z)^n - (1-z)^n]", false},
      {"tanmult", {"n", "t"}, "tan(n arctan t)", false},
      {"arctan", {"t"}, "arctan t", true},
      {"tan", {"theta"}, "tan theta", true},
      {"logcf", {"z"}, "log((1+z)/(1-z))", true},
      {"vcoth", {"v"}, "v (e^{2v}+1)/(e^{2v}-1)", true},
  };
  return registry;
}

const FamilyInfo& find_family(std::string_view id) {
  for (const auto& info : family_registry()) {
    if (info.id == id) return info;
  }
  std::vector<std::string_view> ids;
  for (const auto& info : family_registry()) ids.push_back(info.id);
  throw UsageError("unknown family '" + std::string(id) + "' (valid: " + join(ids) + ")");
}

Family<double> make_family(std::string_view id, const ParameterMap<double>& params) {
  return build<double>(id, params);
}

Family<BigRational> make_exact_family(std::string_view id, const ParameterMap<BigRational>& params) {
  return build<BigRational>(id, params);
}

double parse_real(std::string_view text) {
  if (text.find('/') != std::string_view::npos) {
    BigRational q;
    try {
      q = BigRational::parse(text);
    } catch (const Error&) {
      throw UsageError("malformed number '" + std::string(text) + "'");
    }
    // Correctly rounded when both parts are exactly representable.
    const mpz_class num = q.numerator(), den = q.denominator();
    if (abs(num) < (mpz_class(1) << 53) && den < (mpz_class(1) << 53)) {
      return num.get_d() / den.get_d();
    }
    return q.to_double();
  }
  const std::string s(text);
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(value)) {
    throw UsageError("malformed number '" + s + "'");
  }
  return value;
}

}  // namespace eulercf
