#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rkhsmult/report.hpp"
#include "rkhsmult/version.hpp"

namespace {

struct Options {
  std::string config_path;
  std::string out_path;
  std::string csv_path;
  int degree_override = -1;
  std::string tol_override;
  std::string mode_override;
  bool dense = false;
};

void add_common(CLI::App* cmd, Options& options) {
  cmd->add_option("--config", options.config_path, "job configuration (JSON)")->required();
  cmd->add_option("--degree", options.degree_override, "override truncation degree N");
  cmd->add_option("--tol", options.tol_override, "override tolerance (number or p/q)");
  cmd->add_option("--mode", options.mode_override, "override arithmetic mode (exact|float)")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--out", options.out_path, "write the report JSON to this file");
  cmd->add_option("--csv", options.csv_path, "write per-sample residual rows as CSV");
  cmd->add_flag("--dense", options.dense, "add the 100-point low-radius sweep (float mode)");
}

int run(const Options& options, rkhsmult::Subcommand subcommand) {
  rkhsmult::JobConfig config = rkhsmult::load_config_file(options.config_path);
  if (options.degree_override > 0) config.truncation_degree = options.degree_override;
  if (!options.tol_override.empty())
    config.tolerance = rkhsmult::parse_rational(options.tol_override);
  if (options.mode_override == "exact") config.mode = rkhsmult::ArithmeticMode::Exact;
  if (options.mode_override == "float") config.mode = rkhsmult::ArithmeticMode::Float;
  if (options.dense) config.dense = true;
  rkhsmult::validate_config(config);  // overrides can break cross-field invariants

  auto started = std::chrono::steady_clock::now();
  rkhsmult::RunResult result = rkhsmult::run_job(config, subcommand);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();

  std::string text = rkhsmult::report_to_string(result.report);
  if (options.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(options.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << options.out_path << "'\n";
      return 2;
    }
    out << text;
  }
  if (!options.csv_path.empty()) {
    std::ofstream csv(options.csv_path, std::ios::binary);
    if (!csv) {
      std::cerr << "error: cannot write '" << options.csv_path << "'\n";
      return 2;
    }
    csv << result.csv;
  }
  // Timing stays on stderr: the report itself must be reproducible byte
  // for byte across runs.
  std::cerr << "rkhsmult: " << result.report["summary"]["verdict"].get<std::string>()
            << " (" << elapsed << " ms)\n";
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complete Nevanlinna-Pick structure and multiplicativity checks for "
               "unitarily invariant kernels"};
  app.set_version_flag("--version", std::string(rkhsmult::kToolVersion));
  app.require_subcommand(1);

  Options options;
  std::map<std::string, rkhsmult::Subcommand> dispatch = {
      {"cnp", rkhsmult::Subcommand::Cnp},         {"verify", rkhsmult::Subcommand::Verify},
      {"norm", rkhsmult::Subcommand::Norm},       {"identity", rkhsmult::Subcommand::Identity},
      {"report", rkhsmult::Subcommand::Report},
  };
  add_common(app.add_subcommand("cnp", "CNP transform, verdict and b_n table"), options);
  add_common(app.add_subcommand("verify", "criterion checks (power/schur/tensor/suite)"),
             options);
  add_common(app.add_subcommand("norm", "truncated functional norms"), options);
  add_common(app.add_subcommand("identity", "coefficient-identity sweeps"), options);
  add_common(app.add_subcommand("report", "run every configured check"), options);

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& [name, sub] : dispatch)
      if (app.got_subcommand(name)) return run(options, sub);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const rkhsmult::Error& e) {
    std::cerr << "error[" << rkhsmult::error_kind_name(e.kind()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
