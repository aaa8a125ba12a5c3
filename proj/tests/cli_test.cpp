#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "eulercf/cli.hpp"
#include "eulercf/registry.hpp"

using namespace eulercf;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
  return cells;
}

// Value of "key: value" in text output.
std::string field(const std::string& text, const std::string& key) {
  for (const auto& line : lines(text)) {
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  }
  return {};
}

std::vector<std::string> default_params(std::string_view family) {
  if (family == "lagrange" || family == "uniform") return {"--param", "n=1/2", "--param", "x=0.2"};
  if (family == "symmetric") return {"--param", "n=2.5", "--param", "z=0.3"};
  if (family == "tanmult") return {"--param", "n=3", "--param", "t=0.4"};
  if (family == "arctan") return {"--param", "t=0.7"};
  if (family == "tan") return {"--param", "theta=0.6"};
  if (family == "logcf") return {"--param", "z=0.5"};
  return {"--param", "v=1.5"};
}

std::vector<std::string> with_family(std::vector<std::string> head, std::string_view family) {
  head.push_back("--family");
  head.emplace_back(family);
  for (auto& p : default_params(family)) head.push_back(p);
  return head;
}

}  // namespace

TEST_CASE("eval: vcoth at v=1") {
  const auto r = run({"eval", "--family", "vcoth", "--param", "v=1", "--tol", "1e-13"});
  REQUIRE(r.code == cli::exit_code::ok);
  CHECK(std::stod(field(r.out, "value")) == doctest::Approx(1.3130352854993312).epsilon(1e-13));
  CHECK(field(r.out, "converged") == "true");
}

TEST_CASE("eval: symmetric n=3, z=1/2 terminates at 21/13") {
  const auto r = run({"eval", "--family", "symmetric", "--param", "n=3", "--param", "z=1/2"});
  REQUIRE(r.code == cli::exit_code::ok);
  CHECK(field(r.out, "exact") == "21/13");
  CHECK(field(r.out, "terminated_finitely") == "true");

  const auto decimal = run({"eval", "--family", "symmetric", "--param", "n=3", "--param", "z=0.5"});
  REQUIRE(decimal.code == cli::exit_code::ok);
  CHECK(std::stod(field(decimal.out, "value")) == doctest::Approx(21.0 / 13.0).epsilon(1e-15));
  CHECK(field(decimal.out, "terminated_finitely") == "true");
}

TEST_CASE("eval: logcf outside the disc is a domain error") {
  const auto r = run({"eval", "--family", "logcf", "--param", "z=1.5"});
  CHECK(r.code == cli::exit_code::usage);
  CHECK(r.err.find("outside convergence domain") != std::string::npos);
}

TEST_CASE("eval: json output carries the config echo") {
  const auto r = run({"eval", "--family", "arctan", "--param", "t=1", "--format", "json"});
  REQUIRE(r.code == cli::exit_code::ok);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["config"]["family"] == "arctan");
  CHECK(j["config"]["parameters"]["t"] == "1");
  CHECK(j["report"]["value"].get<double>() == doctest::Approx(0.7853981633974483).epsilon(1e-13));
}

TEST_CASE("table: tangent at theta=1 reaches 1e-13 by depth 20") {
  const auto r = run({"table", "--family", "tan", "--param", "theta=1.0", "--depths", "1..20", "--format", "csv"});
  REQUIRE(r.code == cli::exit_code::ok);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 21);
  CHECK(rows.front() == "depth,convergent,abs_error,rel_error");
  const auto last = split(rows.back());
  CHECK(last[0] == "20");
  CHECK(std::stod(last[3]) <= 1e-13);
}

TEST_CASE("table: symmetric n=4 rows are constant after termination") {
  const auto r = run({"table", "--family", "symmetric", "--param", "n=4", "--param", "z=0.3", "--depths", "1..10",
                      "--format", "csv"});
  REQUIRE(r.code == cli::exit_code::ok);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 11);
  const std::string reference = split(rows[3])[1];
  for (std::size_t i = 3; i < rows.size(); ++i) {
    const auto cells = split(rows[i]);
    CHECK(cells[1] == reference);
    CHECK(cells[2] == split(rows[3])[2]);
  }
}

TEST_CASE("table: logcf at zero is all zeros") {
  const auto r = run({"table", "--family", "logcf", "--param", "z=0", "--depths", "1..5", "--format", "csv"});
  REQUIRE(r.code == cli::exit_code::ok);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split(rows[i]);
    CHECK(cells[1] == "0");
    CHECK(cells[2] == "0");
    CHECK(cells[3] == "0");
  }
}

TEST_CASE("table: byte-identical across runs") {
  const std::vector<std::vector<std::string>> configs = {
      {"table", "--family", "tan", "--param", "theta=1.2", "--depths", "1..30", "--format", "csv"},
      {"table", "--family", "vcoth", "--param", "v=-3.5", "--depths", "1..25", "--format", "json"},
      {"table", "--family", "lagrange", "--param", "n=-3/2", "--param", "x=1/3", "--depths", "1..40"},
  };
  for (const auto& args : configs) {
    const auto first = run(args);
    const auto second = run(args);
    REQUIRE(first.code == cli::exit_code::ok);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("table: json rows mirror csv rows") {
  const std::vector<std::string> base = {"table", "--family", "arctan", "--param", "t=2", "--depths", "3..7"};
  auto csv_args = base;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  auto json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const auto csv = lines(run(csv_args).out);
  const auto j = nlohmann::json::parse(run(json_args).out);
  REQUIRE(j["rows"].size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto cells = split(csv[i + 1]);
    CHECK(j["rows"][i]["depth"].get<int>() == std::stoi(cells[0]));
    CHECK(j["rows"][i]["convergent"].get<double>() == std::stod(cells[1]));
  }
}

TEST_CASE("verify: stated suites") {
  const auto integer = run({"verify", "--suite", "integer-n", "--bound", "5"});
  CHECK(integer.code == cli::exit_code::ok);
  int pass_lines = 0;
  for (const auto& line : lines(integer.out)) pass_lines += line.rfind("PASS", 0) == 0 ? 1 : 0;
  CHECK(pass_lines == 10);

  CHECK(run({"verify", "--suite", "negation", "--bound", "7"}).code == cli::exit_code::ok);
  CHECK(run({"verify", "--suite", "tangent-closed-forms", "--bound", "6"}).code == cli::exit_code::ok);
  CHECK(run({"verify", "--suite", "variable-change"}).code == cli::exit_code::ok);

  const auto series = run({"verify", "--suite", "series-xiv", "--seed", "42", "--format", "json"});
  CHECK(series.code == cli::exit_code::ok);
  const auto j = nlohmann::json::parse(series.out);
  CHECK(j["total"] == 50);
  CHECK(j["passed"] == 50);
}

TEST_CASE("verify: bound outside 1..24 is a usage error") {
  CHECK(run({"verify", "--suite", "negation", "--bound", "25"}).code == cli::exit_code::usage);
  CHECK(run({"verify", "--suite", "negation", "--bound", "0"}).code == cli::exit_code::usage);
  CHECK(run({"verify", "--suite", "nonsense"}).code == cli::exit_code::usage);
}

TEST_CASE("bench: CF against Taylor") {
  const auto log = run({"bench", "--family", "logcf", "--param", "z=0.9", "--tol", "1e-12", "--repeats", "3"});
  REQUIRE(log.code == cli::exit_code::ok);
  CHECK(std::stoul(field(log.out, "cf_depth")) < std::stoul(field(log.out, "taylor_terms")));

  const auto atan = run({"bench", "--family", "arctan", "--param", "t=1", "--tol", "1e-10", "--repeats", "3"});
  REQUIRE(atan.code == cli::exit_code::ok);
  CHECK(field(atan.out, "taylor_terms") != "none");
  CHECK(std::stoul(field(atan.out, "cf_depth")) < 100);

  const auto vcoth = run({"bench", "--family", "vcoth", "--param", "v=0.1", "--tol", "1e-14", "--repeats", "3"});
  REQUIRE(vcoth.code == cli::exit_code::ok);
  CHECK(std::stoul(field(vcoth.out, "cf_depth")) <= 5);
}

TEST_CASE("bench: families without a comparator") {
  for (const char* family : {"symmetric", "tanmult"}) {
    const auto r = run(with_family({"bench"}, family));
    CHECK(r.code == cli::exit_code::usage);
    CHECK(r.err.find("comparator unavailable") != std::string::npos);
  }
}

TEST_CASE("completeness: every family through every command") {
  for (const auto& info : family_registry()) {
    CAPTURE(info.id);
    CHECK(run(with_family({"eval"}, info.id)).code == cli::exit_code::ok);
    CHECK(run(with_family({"table", "--depths", "1..12", "--format", "csv"}, info.id)).code == cli::exit_code::ok);
    const auto bench = run(with_family({"bench", "--repeats", "1", "--tol", "1e-10"}, info.id));
    CHECK(bench.code == (info.has_taylor_comparator ? cli::exit_code::ok : cli::exit_code::usage));
  }
}

TEST_CASE("exit codes") {
  SUBCASE("0: success and help") {
    CHECK(run({"eval", "--family", "tan", "--param", "theta=0.5"}).code == 0);
    CHECK(run({"--help"}).code == 0);
  }
  SUBCASE("1: usage") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"eval", "--param", "v=1"}).code == 1);
    const auto unknown = run({"eval", "--family", "gamma", "--param", "v=1"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("vcoth") != std::string::npos);
    const auto missing = run({"eval", "--family", "lagrange", "--param", "n=2"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("x") != std::string::npos);
    CHECK(run({"eval", "--family", "vcoth", "--param", "w=1"}).code == 1);
    CHECK(run({"eval", "--family", "vcoth", "--param", "v=abc"}).code == 1);
    CHECK(run({"eval", "--family", "vcoth", "--param", "v"}).code == 1);
    CHECK(run({"eval", "--family", "vcoth", "--param", "v=1", "--param", "v=2"}).code == 1);
    CHECK(run({"eval", "--family", "vcoth", "--param", "v=1", "--tol", "0"}).code == 1);
    CHECK(run({"eval", "--family", "vcoth", "--param", "v=1", "--format", "xml"}).code == 1);
    CHECK(run({"table", "--family", "vcoth", "--param", "v=1", "--depths", "5..2"}).code == 1);
    CHECK(run({"table", "--family", "vcoth", "--param", "v=1", "--depths", "x"}).code == 1);
    CHECK(run({"bench", "--family", "vcoth", "--param", "v=1", "--comparator", "pade"}).code == 1);
  }
  SUBCASE("1: domain") {
    CHECK(run({"eval", "--family", "tan", "--param", "theta=1.5707963267948966"}).code == 1);
    CHECK(run({"eval", "--family", "lagrange", "--param", "n=2", "--param", "x=-1"}).code == 1);
    CHECK(run({"eval", "--family", "uniform", "--param", "n=2", "--param", "x=-2"}).code == 1);
    CHECK(run({"eval", "--family", "symmetric", "--param", "n=2", "--param", "z=1"}).code == 1);
    CHECK(run({"eval", "--family", "symmetric", "--param", "n=2", "--param", "z=1/1"}).code == 1);
  }
  SUBCASE("2: non-convergence") {
    const auto r = run({"eval", "--family", "logcf", "--param", "z=0.999", "--max-depth", "10"});
    CHECK(r.code == 2);
    CHECK(r.err.find("not converged") != std::string::npos);
    CHECK(run({"bench", "--family", "logcf", "--param", "z=0.999", "--max-depth", "10"}).code == 2);
  }
  SUBCASE("3: verification failure") {
    const SuiteReport failing{"integer-n", {{"n=1", true, ""}, {"n=2", false, "cf=1 lhs=(1 + z^2)/1"}}};
    std::ostringstream out, err;
    CHECK(cli::report_suite(failing, 2, cli::RunConfig{}, out, err) == 3);
    CHECK(out.str().find("FAIL integer-n n=2") != std::string::npos);
    CHECK(err.str().find("n=2: cf=1 lhs=(1 + z^2)/1") != std::string::npos);
  }
}
