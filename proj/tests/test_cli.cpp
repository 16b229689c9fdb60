#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rkhsmult/expr.hpp"
#include "rkhsmult/report.hpp"

using namespace rkhsmult;
using Complex = std::complex<double>;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::filesystem::path source_dir() {
  const char* dir = std::getenv("RKHSMULT_SOURCE_DIR");
  REQUIRE(dir != nullptr);
  return dir;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

JobConfig config_from_string(const std::string& text) {
  return parse_config(nlohmann::json::parse(text));
}

}  // namespace

TEST_CASE("kernel expression grammar") {
  auto bergman = std::get<Kernel>(parse_kernel_expr("power(szego, 2)", 12));
  for (int n = 0; n <= 12; ++n) CHECK(bergman.a_n(n) == Rational(n + 1));

  auto mixed = std::get<Kernel>(parse_kernel_expr("schur(szego, dirichlet)", 12));
  CHECK(mixed.a_n(2) == Rational(11, 6));

  auto da = std::get<Kernel>(parse_kernel_expr("drury_arveson(3)", 8));
  CHECK(da.dimension() == 3);

  auto custom = std::get<Kernel>(parse_kernel_expr("coeffs([1, 1/2, 1/3])", 24));
  CHECK(custom.truncation_degree() == 2);  // fixed by the list, not by N
  CHECK(custom.a_n(1) == Rational(1, 2));

  auto nested = std::get<Kernel>(parse_kernel_expr("power(schur(szego, szego), 2)", 8));
  CHECK(nested.a_n(1) == 4);  // szego^4 has a_1 = binom(4, 3)

  CHECK(std::holds_alternative<TensorKernel>(parse_kernel_expr("tensor(szego, szego)", 8)));
}

TEST_CASE("kernel expression errors") {
  CHECK_THROWS_AS(parse_kernel_expr("coeffs([1, 1, 0])", 8), Error);  // a_2 = 0
  CHECK_THROWS_AS(parse_kernel_expr("coeffs([2, 1])", 8), Error);     // a_0 != 1
  CHECK_THROWS_AS(parse_kernel_expr("szego extra", 8), ParseError);
  CHECK_THROWS_AS(parse_kernel_expr("mystery", 8), ParseError);
  CHECK_THROWS_AS(parse_kernel_expr("power(szego)", 8), ParseError);
  CHECK_THROWS_AS(parse_kernel_expr("tensor(tensor(szego, szego), szego)", 8), ParseError);
  CHECK_THROWS_AS(parse_kernel_expr("schur(szego, drury_arveson(2))", 8), Error);

  try {
    parse_kernel_expr("power(szego, x)", 8);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);  // position points into the expression
  }
}

TEST_CASE("functional expression grammar") {
  auto point = parse_functional_expr("point([3/10, -1/4+1/2i, 0.25i])");
  CHECK(point.kind == FunctionalSpec::Kind::Point);
  REQUIRE(point.point.size() == 3);
  CHECK(point.point[0] == GaussianRational(Rational(3, 10)));
  CHECK(point.point[1] == GaussianRational(Rational(-1, 4), Rational(1, 2)));
  CHECK(point.point[2] == GaussianRational(Rational(0), Rational(1, 4)));

  CHECK(parse_functional_expr("counterexample").kind ==
        FunctionalSpec::Kind::Counterexample);
  CHECK(parse_functional_expr("boundary_limit_ones").kind ==
        FunctionalSpec::Kind::BoundaryLimitOnes);

  auto tensor = parse_functional_expr("tensor_point([1/4], [0.5])");
  CHECK(tensor.kind == FunctionalSpec::Kind::TensorPoint);
  CHECK(tensor.tensor_right[0] == GaussianRational(Rational(1, 2)));

  auto table = parse_functional_expr("table(values.json)");
  CHECK(table.table_path == "values.json");

  CHECK_THROWS_AS(parse_functional_expr("point([])"), ParseError);
  CHECK_THROWS_AS(parse_functional_expr("point([1/0])"), ParseError);
  CHECK_THROWS_AS(parse_functional_expr("nonsense(1)"), ParseError);
  CHECK_THROWS_AS(parse_functional_expr("counterexample junk"), ParseError);
}

TEST_CASE("functional table files round-trip") {
  auto path = temp_file("rkhsmult_table_test.json");
  {
    std::ofstream out(path);
    out << R"json({
      "dimension": 1,
      "degree": 6,
      "label": "from-table",
      "values": [
        {"alpha": [0], "value": ["1", "0"]},
        {"alpha": [1], "value": ["1/2", "-1/3"]},
        {"alpha": [3], "value": ["0", "2/7"]}
      ]
    })json";
  }
  FunctionalSpec spec;
  spec.kind = FunctionalSpec::Kind::Table;
  spec.table_path = path.string();
  auto f = make_functional<GaussianRational>(spec, Kernel::szego(6));
  CHECK(f.value(MultiIndex({0})) == GaussianRational(Rational(1)));
  CHECK(f.value(MultiIndex({1})) == GaussianRational(Rational(1, 2), Rational(-1, 3)));
  CHECK(f.value(MultiIndex({2})) == GaussianRational(Rational(0)));  // absent -> zero
  CHECK(f.value(MultiIndex({3})) == GaussianRational(Rational(0), Rational(2, 7)));
  std::filesystem::remove(path);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(config_from_string("[]"), Error);
  // unknown kernel reference
  CHECK_THROWS_AS(config_from_string(
                      R"json({"kernels": {"k": "szego"},
                          "checks": [{"type": "cnp", "kernel": "other"}]})json"),
                  Error);
  // unknown functional reference
  CHECK_THROWS_AS(config_from_string(
                      R"json({"kernels": {"k": "szego"},
                          "checks": [{"type": "norm", "kernel": "k", "functional": "f"}]})json"),
                  Error);
  // N must cover 2 * max_degree
  CHECK_THROWS_AS(config_from_string(
                      R"json({"truncation_degree": 6,
                          "kernels": {"k": "szego"}, "functionals": {"f": "counterexample"},
                          "checks": [{"type": "brute_force", "kernel": "k",
                                      "functional": "f", "max_degree": 4}]})json"),
                  Error);
  // dense sweep requires float mode
  CHECK_THROWS_AS(config_from_string(
                      R"json({"mode": "exact", "samples": {"dense": true},
                          "kernels": {"k": "szego"},
                          "checks": [{"type": "cnp", "kernel": "k"}]})json"),
                  Error);
  // custom grid points must stay within |t| <= 1/2
  CHECK_THROWS_AS(config_from_string(
                      R"json({"samples": {"base_points": ["3/5"]},
                          "kernels": {"k": "szego"},
                          "checks": [{"type": "cnp", "kernel": "k"}]})json"),
                  Error);
  CHECK_THROWS_AS(config_from_string(
                      R"json({"tolerance": 0, "kernels": {"k": "szego"},
                          "checks": [{"type": "cnp", "kernel": "k"}]})json"),
                  Error);

  auto ok = config_from_string(
      R"json({"kernels": {"k": "szego"}, "functionals": {"f": "point([1/8])"},
          "samples": {"base_points": ["1/2", ["1/4", "-1/4"]]},
          "checks": [{"type": "power_criterion", "kernel": "k", "functional": "f"}]})json");
  CHECK(ok.base_points.size() == 2);
  CHECK(ok.base_points[1].second == Rational(-1, 4));
}

TEST_CASE("run_job reproduces the golden demo report byte for byte") {
  auto config = load_config_file((source_dir() / "configs" / "demo_report.json").string());
  auto first = run_job(config, Subcommand::Report);
  auto second = run_job(config, Subcommand::Report);
  std::string golden = read_file(source_dir() / "tests" / "golden" / "demo_report.golden.json");
  CHECK(report_to_string(first.report) == golden);
  CHECK(report_to_string(second.report) == report_to_string(first.report));
  CHECK(first.exit_code == 1);  // the counterexample checks fail by design
}

TEST_CASE("run_job float mode and subcommand filtering") {
  auto config = config_from_string(
      R"json({"mode": "float", "truncation_degree": 16,
          "kernels": {"szego": "szego", "dirichlet": "dirichlet"},
          "functionals": {"f": "point([1/4])"},
          "checks": [{"type": "power_criterion", "kernel": "szego", "functional": "f", "p": 2},
                     {"type": "schur_criterion", "kernel": "szego", "kernel2": "dirichlet",
                      "functional": "f"},
                     {"type": "norm", "kernel": "szego", "functional": "f"}]})json");
  auto verify_only = run_job(config, Subcommand::Verify);
  CHECK(verify_only.report["checks"].size() == 2);
  for (const auto& entry : verify_only.report["checks"])
    CHECK(entry["result"]["mode"] == "float");

  auto norm_only = run_job(config, Subcommand::Norm);
  CHECK(norm_only.report["checks"].size() == 1);
  CHECK(norm_only.exit_code == 0);

  // cnp subcommand synthesizes one entry per kernel when none are configured
  auto cnp = run_job(config, Subcommand::Cnp);
  CHECK(cnp.report["checks"].size() == 2);

  CHECK_THROWS_AS(run_job(config, Subcommand::Identity), Error);  // nothing matches
}

TEST_CASE("identity checks refuse float mode") {
  auto config = config_from_string(
      R"json({"mode": "float", "truncation_degree": 12,
          "kernels": {"k": "szego"}, "functionals": {"f": "counterexample"},
          "checks": [{"type": "identity", "kernel": "k", "functional": "f", "max_degree": 4}]})json");
  try {
    run_job(config, Subcommand::Report);
    FAIL("expected NonRationalValues");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonRationalValues);
  }
}

TEST_CASE("report echoes the audit fields") {
  auto config = config_from_string(
      R"json({"kernels": {"k": "szego"}, "checks": [{"type": "cnp", "kernel": "k"}]})json");
  auto result = run_job(config, Subcommand::Report);
  CHECK(result.report["config"]["truncation_degree"] == 24);
  CHECK(result.report["config"]["mode"] == "exact");
  CHECK(result.report["notes"].contains("tail_estimate_method"));
  CHECK(result.report["tool"]["name"] == "rkhsmult");
}

TEST_CASE("csv export carries one row per sample") {
  auto config = config_from_string(
      R"json({"kernels": {"k": "szego"}, "functionals": {"f": "counterexample"},
          "checks": [{"type": "power_criterion", "kernel": "k", "functional": "f"}]})json");
  auto result = run_job(config, Subcommand::Report);
  std::istringstream lines(result.csv);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 11);  // header + 10 default samples
}

TEST_CASE("cli binary end-to-end") {
  const char* bin = std::getenv("RKHSMULT_BIN");
  REQUIRE(bin != nullptr);
  auto config = source_dir() / "configs" / "demo_report.json";
  auto out1 = temp_file("rkhsmult_cli_run1.json");
  auto out2 = temp_file("rkhsmult_cli_run2.json");
  auto csv = temp_file("rkhsmult_cli_run.csv");

  std::string base = std::string(bin) + " report --config " + config.string();
  int rc1 = std::system((base + " --out " + out1.string() + " --csv " + csv.string() +
                         " 2>/dev/null")
                            .c_str());
  int rc2 = std::system((base + " --out " + out2.string() + " 2>/dev/null").c_str());
  CHECK(WEXITSTATUS(rc1) == 1);
  CHECK(WEXITSTATUS(rc2) == 1);
  CHECK(read_file(out1) == read_file(out2));  // byte-identical reruns
  CHECK(read_file(out1) ==
        read_file(source_dir() / "tests" / "golden" / "demo_report.golden.json"));
  CHECK(read_file(csv).rfind("check_index,", 0) == 0);

  int rc_bad = std::system((std::string(bin) + " report --config /nonexistent.json"
                            " >/dev/null 2>/dev/null")
                               .c_str());
  CHECK(WEXITSTATUS(rc_bad) == 2);

  std::filesystem::remove(out1);
  std::filesystem::remove(out2);
  std::filesystem::remove(csv);
}
