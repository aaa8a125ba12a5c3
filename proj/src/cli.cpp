#include "eulercf/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eulercf/error.hpp"
#include "eulercf/number_format.hpp"
#include "eulercf/registry.hpp"
#include "eulercf/taylor.hpp"
#include "eulercf/verify.hpp"

namespace eulercf::cli {

namespace {

using nlohmann::ordered_json;

std::string_view format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::json:
      return "json";
    default:
      return "text";
  }
}

bool wants_exact(const RunConfig& config) {
  return std::any_of(config.parameters.begin(), config.parameters.end(),
                     [](const auto& p) { return p.second.find('/') != std::string::npos; });
}

ParameterMap<double> real_parameters(const RunConfig& config) {
  ParameterMap<double> out;
  for (const auto& [name, text] : config.parameters) out[name] = parse_real(text);
  return out;
}

ParameterMap<BigRational> exact_parameters(const RunConfig& config) {
  ParameterMap<BigRational> out;
  for (const auto& [name, text] : config.parameters) {
    try {
      out[name] = BigRational::parse(text);
    } catch (const DomainError&) {
      throw UsageError("malformed number '" + text + "'");
    }
  }
  return out;
}

std::string parameter_text(const RunConfig& config) {
  std::string s;
  for (const auto& [name, text] : config.parameters) s += (s.empty() ? "" : " ") + name + "=" + text;
  return s;
}

ordered_json config_json(std::string_view command, const RunConfig& config) {
  ordered_json j;
  j["command"] = command;
  j["family"] = config.family;
  ordered_json params = ordered_json::object();
  for (const auto& [name, text] : config.parameters) params[name] = text;
  j["parameters"] = params;
  j["tol"] = config.tol;
  j["max_depth"] = config.max_depth;
  j["format"] = format_name(config.format);
  return j;
}

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

// Runs `body`, translating library errors into the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const ArithmeticError& e) {
    err << "arithmetic error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const AlgebraError& e) {
    err << "algebra error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << " at depth " << e.depth() << '\n';
    return exit_code::not_converged;
  } catch (const OracleError& e) {
    err << "verification failure: " << e.what() << '\n';
    return exit_code::verification_failed;
  }
}

struct EvalOutcome {
  EvalReport report;
  std::optional<BigRational> exact;
};

void render_eval(const RunConfig& config, const EvalOutcome& r, std::ostream& out) {
  const EvalReport& rep = r.report;
  switch (config.format) {
    case OutputFormat::json: {
      ordered_json j;
      j["config"] = config_json("eval", config);
      ordered_json report;
      report["value"] = rep.value;
      if (r.exact) report["exact"] = r.exact->to_string();
      report["depth_used"] = rep.depth_used;
      report["converged"] = rep.converged;
      report["terminated_finitely"] = rep.terminated_finitely;
      report["est_error"] = optional_number(rep.est_error);
      j["report"] = report;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "value,exact,depth_used,converged,terminated_finitely,est_error\n";
      out << format_double(rep.value) << ',' << (r.exact ? r.exact->to_string() : "") << ',' << rep.depth_used << ','
          << (rep.converged ? "true" : "false") << ',' << (rep.terminated_finitely ? "true" : "false") << ','
          << (rep.est_error ? format_double(*rep.est_error) : "") << '\n';
      break;
    case OutputFormat::text:
      out << "family: " << config.family << '\n';
      out << "parameters: " << parameter_text(config) << '\n';
      out << "value: " << format_double(rep.value) << '\n';
      if (r.exact) out << "exact: " << r.exact->to_string() << '\n';
      out << "depth_used: " << rep.depth_used << '\n';
      out << "converged: " << (rep.converged ? "true" : "false") << '\n';
      out << "terminated_finitely: " << (rep.terminated_finitely ? "true" : "false") << '\n';
      out << "est_error: " << (rep.est_error ? format_double(*rep.est_error) : "none") << '\n';
      break;
  }
}

std::optional<EvalOutcome> eval_exact(const RunConfig& config) {
  const Family<BigRational> family = make_exact_family(config.family, exact_parameters(config));
  const auto k = detect_termination(family.stream, config.max_depth);
  if (!k) return std::nullopt;
  EvalOutcome r;
  r.exact = eval_fixed(family.stream, *k - 1);
  r.report.value = r.exact->to_double();
  r.report.depth_used = *k - 1;
  r.report.converged = true;
  r.report.terminated_finitely = true;
  r.report.est_error = 0.0;
  return r;
}

Family<double> checked_family(const RunConfig& config) {
  find_family(config.family);
  return make_family(config.family, real_parameters(config));
}

template <class F>
double median_ns(std::size_t repeats, F&& fn) {
  std::vector<double> samples;
  samples.reserve(repeats);
  for (std::size_t i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  return samples.size() % 2 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

std::pair<std::size_t, std::size_t> parse_depths(const std::string& text) {
  const auto dots = text.find("..");
  auto parse = [&](std::string_view part) -> std::size_t {
    if (part.empty() || part.size() > 9 || !std::all_of(part.begin(), part.end(), ::isdigit)) {
      throw UsageError("malformed --depths '" + text + "' (expected a..b)");
    }
    return static_cast<std::size_t>(std::stoul(std::string(part)));
  };
  if (dots == std::string::npos) throw UsageError("malformed --depths '" + text + "' (expected a..b)");
  const std::size_t first = parse(std::string_view(text).substr(0, dots));
  const std::size_t last = parse(std::string_view(text).substr(dots + 2));
  if (first > last) throw UsageError("--depths range is empty: '" + text + "'");
  if (last > 100000) throw UsageError("--depths upper end exceeds 100000");
  return {first, last};
}

}  // namespace

int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    find_family(config.family);
    if (config.max_depth < 1) throw UsageError("--max-depth must be at least 1");
    if (!(config.tol > 0)) throw UsageError("--tol must be positive");
    if (wants_exact(config)) {
      if (auto exact = eval_exact(config)) {
        render_eval(config, *exact, out);
        return exit_code::ok;
      }
    }
    const Family<double> family = checked_family(config);
    EvalOutcome r;
    try {
      r.report = eval_adaptive(family.stream, config.tol, config.max_depth);
    } catch (const ConvergenceError& e) {
      r.report.value = e.best_value();
      r.report.depth_used = e.depth();
      r.report.est_error = e.est_error();
      render_eval(config, r, out);
      err << "error: " << e.what() << " (best value " << format_double(e.best_value()) << ", est_error "
          << format_double(e.est_error()) << ")\n";
      return exit_code::not_converged;
    }
    render_eval(config, r, out);
    return exit_code::ok;
  });
}

std::vector<TableRow> table_rows(const RunConfig& config, std::size_t first, std::size_t last) {
  const Family<double> family = checked_family(config);
  const double oracle = family.lhs().value;
  const auto forward = convergents(family.stream, last);
  std::vector<TableRow> rows;
  for (std::size_t d = first; d <= last; ++d) {
    double value;
    try {
      value = eval_fixed(family.stream, d);
    } catch (const ArithmeticError&) {
      // An intermediate level of the backward pass is infinite; the forward
      // recurrence still gives the convergent.
      const auto& c = forward[d];
      value = c.denominator == 0.0 ? std::copysign(INFINITY, c.numerator) : c.numerator / c.denominator;
    }
    TableRow row;
    row.depth = d;
    row.convergent = value;
    row.abs_error = std::abs(value - oracle);
    row.rel_error = row.abs_error / std::max(std::abs(oracle), 1e-300);
    rows.push_back(row);
  }
  return rows;
}

int cmd_table(const RunConfig& config, std::size_t first, std::size_t last, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::vector<TableRow> rows = table_rows(config, first, last);
    switch (config.format) {
      case OutputFormat::json: {
        ordered_json j;
        j["config"] = config_json("table", config);
        j["config"]["depths"] = std::to_string(first) + ".." + std::to_string(last);
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
          arr.push_back({{"depth", r.depth},
                         {"convergent", r.convergent},
                         {"abs_error", r.abs_error},
                         {"rel_error", r.rel_error}});
        }
        j["rows"] = arr;
        out << j.dump(2) << '\n';
        break;
      }
      case OutputFormat::csv:
        out << "depth,convergent,abs_error,rel_error\n";
        for (const auto& r : rows) {
          out << r.depth << ',' << format_double(r.convergent) << ',' << format_double(r.abs_error) << ','
              << format_double(r.rel_error) << '\n';
        }
        break;
      case OutputFormat::text:
        out << std::left << std::setw(7) << "depth" << std::setw(26) << "convergent" << std::setw(26) << "abs_error"
            << "rel_error" << '\n';
        for (const auto& r : rows) {
          out << std::setw(7) << r.depth << std::setw(26) << format_double(r.convergent) << std::setw(26)
              << format_double(r.abs_error) << format_double(r.rel_error) << '\n';
        }
        break;
    }
    return exit_code::ok;
  });
}

int report_suite(const SuiteReport& report, int bound, const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::size_t passed = 0;
  for (const auto& c : report.cases) passed += c.passed ? 1 : 0;
  switch (config.format) {
    case OutputFormat::json: {
      ordered_json j;
      j["suite"] = report.suite;
      j["bound"] = bound;
      j["seed"] = config.seed;
      ordered_json arr = ordered_json::array();
      for (const auto& c : report.cases) arr.push_back({{"case", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      j["cases"] = arr;
      j["passed"] = passed;
      j["total"] = report.cases.size();
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "case,passed,detail\n";
      for (const auto& c : report.cases) {
        out << c.name << ',' << (c.passed ? "true" : "false") << ",\"" << c.detail << "\"\n";
      }
      break;
    case OutputFormat::text:
      for (const auto& c : report.cases) {
        out << (c.passed ? "PASS " : "FAIL ") << report.suite << ' ' << c.name << "  " << c.detail << '\n';
      }
      out << report.suite << ": " << passed << '/' << report.cases.size() << " passed\n";
      break;
  }
  if (const CaseResult* bad = report.first_failure()) {
    err << "verification failed: " << report.suite << ' ' << bad->name << ": " << bad->detail << '\n';
    return exit_code::verification_failed;
  }
  return exit_code::ok;
}

int cmd_verify(std::string_view suite, int bound, const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return report_suite(run_suite(suite, bound, config.seed), bound, config, out, err); });
}

int cmd_bench(const RunConfig& config, std::string_view comparator, std::size_t repeats, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    if (comparator != "taylor") throw UsageError("unknown comparator '" + std::string(comparator) + "' (valid: taylor)");
    if (repeats < 1) throw UsageError("--repeats must be at least 1");
    const Family<double> family = checked_family(config);
    const auto series = taylor_comparator(family);
    if (!series) throw UsageError("comparator unavailable for family " + config.family);
    const double target = family.lhs().value;

    EvalReport report;
    try {
      report = eval_adaptive(family.stream, config.tol, config.max_depth);
    } catch (const ConvergenceError& e) {
      err << "error: " << e.what() << '\n';
      return exit_code::not_converged;
    }
    // Depth at which the convergent first meets the same accuracy test as
    // the series.
    std::optional<std::size_t> depth_to_oracle;
    const double allowed = config.tol * std::max(1.0, std::abs(target));
    const auto conv = convergents(family.stream, config.max_depth);
    for (const auto& c : conv) {
      if (c.denominator != 0.0 && std::abs(c.numerator / c.denominator - target) <= allowed) {
        depth_to_oracle = c.index;
        break;
      }
    }
    const TaylorCount count = taylor_terms_needed(*series, target, config.tol);

    volatile double sink = 0.0;
    const double cf_ns = median_ns(repeats, [&] { sink = eval_adaptive(family.stream, config.tol, config.max_depth).value; });
    std::optional<double> taylor_ns;
    if (count.terms && count.method == "summation") {
      const std::size_t n = *count.terms;
      taylor_ns = median_ns(repeats, [&] { sink = taylor_sum(*series, n); });
    }
    (void)sink;

    auto opt_size = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("none"); };
    switch (config.format) {
      case OutputFormat::json: {
        ordered_json j;
        j["config"] = config_json("bench", config);
        j["config"]["comparator"] = comparator;
        j["config"]["repeats"] = repeats;
        ordered_json r;
        r["target"] = target;
        r["cf_value"] = report.value;
        r["cf_depth"] = report.depth_used;
        r["cf_terminated_finitely"] = report.terminated_finitely;
        r["cf_depth_to_oracle"] = depth_to_oracle ? ordered_json(*depth_to_oracle) : ordered_json(nullptr);
        r["taylor_series"] = series->name;
        r["taylor_terms"] = count.terms ? ordered_json(*count.terms) : ordered_json(nullptr);
        r["taylor_method"] = count.method;
        r["cf_median_ns"] = cf_ns;
        r["taylor_median_ns"] = optional_number(taylor_ns);
        j["report"] = r;
        out << j.dump(2) << '\n';
        break;
      }
      case OutputFormat::csv:
        out << "family,cf_depth,cf_depth_to_oracle,taylor_terms,taylor_method,cf_median_ns,taylor_median_ns\n";
        out << config.family << ',' << report.depth_used << ',' << (depth_to_oracle ? std::to_string(*depth_to_oracle) : "")
            << ',' << (count.terms ? std::to_string(*count.terms) : "") << ',' << count.method << ','
            << format_double(cf_ns) << ',' << (taylor_ns ? format_double(*taylor_ns) : "") << '\n';
        break;
      case OutputFormat::text:
        out << "family: " << config.family << '\n';
        out << "parameters: " << parameter_text(config) << '\n';
        out << "tol: " << format_double(config.tol) << '\n';
        out << "target: " << format_double(target) << '\n';
        out << "cf_depth: " << report.depth_used << '\n';
        out << "cf_terminated_finitely: " << (report.terminated_finitely ? "true" : "false") << '\n';
        out << "cf_depth_to_oracle: " << opt_size(depth_to_oracle) << '\n';
        out << "taylor_series: " << series->name << '\n';
        out << "taylor_terms: " << opt_size(count.terms) << '\n';
        out << "taylor_method: " << count.method << '\n';
        out << "cf_median_ns: " << std::llround(cf_ns) << '\n';
        out << "taylor_median_ns: " << (taylor_ns ? std::to_string(std::llround(*taylor_ns)) : "none") << '\n';
        break;
    }
    return exit_code::ok;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued fractions for binomial powers, tan, arctan, log and v coth v", "eulercf"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> params;
  std::string format = "text";
  std::string depths = "1..20";
  std::string suite;
  int bound = 12;
  std::string comparator = "taylor";
  std::size_t repeats = 15;

  std::string family_help = "family identifier:";
  for (const auto& info : family_registry()) family_help += " " + std::string(info.id);

  auto add_family_options = [&](CLI::App* sub) {
    sub->add_option("--family", config.family, family_help)->required();
    sub->add_option("--param", params, "parameter assignment name=value (repeatable; value may be p/q)");
  };
  auto add_eval_options = [&](CLI::App* sub) {
    sub->add_option("--tol", config.tol, "relative tolerance")->capture_default_str();
    sub->add_option("--max-depth", config.max_depth, "maximum CF depth")->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json", "text"}))
        ->capture_default_str();
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a family adaptively (exact when parameters are p/q)");
  add_family_options(eval);
  add_eval_options(eval);
  add_format(eval);

  CLI::App* table = app.add_subcommand("table", "convergence table against the left member");
  add_family_options(table);
  table->add_option("--depths", depths, "depth range a..b")->capture_default_str();
  add_format(table);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "integer-n | negation | tangent-closed-forms | variable-change | series-xiv")
      ->required();
  verify->add_option("--bound", bound, "largest |n| checked (1..24)")->capture_default_str();
  verify->add_option("--seed", config.seed, "seed for randomized points")->capture_default_str();
  add_format(verify);

  CLI::App* bench = app.add_subcommand("bench", "CF depth versus Taylor term count");
  add_family_options(bench);
  add_eval_options(bench);
  bench->add_option("--comparator", comparator, "series comparator")->capture_default_str();
  bench->add_option("--repeats", repeats, "timing repetitions")->capture_default_str();
  add_format(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  config.format = format == "csv" ? OutputFormat::csv : (format == "json" ? OutputFormat::json : OutputFormat::text);
  const int param_status = guarded(err, [&] {
    for (const auto& p : params) {
      const auto eq = p.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == p.size()) {
        throw UsageError("malformed --param '" + p + "' (expected name=value)");
      }
      const std::string name = p.substr(0, eq);
      for (const auto& existing : config.parameters) {
        if (existing.first == name) throw UsageError("duplicate parameter '" + name + "'");
      }
      config.parameters.emplace_back(name, p.substr(eq + 1));
    }
    return exit_code::ok;
  });
  if (param_status != exit_code::ok) return param_status;

  if (eval->parsed()) return cmd_eval(config, out, err);
  if (table->parsed()) {
    std::pair<std::size_t, std::size_t> range;
    const int status = guarded(err, [&] {
      range = parse_depths(depths);
      return exit_code::ok;
    });
    if (status != exit_code::ok) return status;
    return cmd_table(config, range.first, range.second, out, err);
  }
  if (verify->parsed()) return cmd_verify(suite, bound, config, out, err);
  return cmd_bench(config, comparator, repeats, out, err);
}

}  // namespace eulercf::cli
