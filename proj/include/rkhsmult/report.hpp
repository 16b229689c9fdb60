#pragma once

#include <string>

#include "rkhsmult/config.hpp"

namespace rkhsmult {

enum class Subcommand { Cnp, Verify, Norm, Identity, Report };

struct RunResult {
  nlohmann::json report;
  int exit_code = 0;    // 0 pass, 1 at least one check failed
  std::string csv;      // per-sample residual rows for criterion checks
};

/// Materializes the configured kernels and functionals, executes the
/// checks selected by the subcommand in declared order, and assembles the
/// report document. The document carries no wall-clock data so identical
/// configs reproduce byte-identical reports.
RunResult run_job(const JobConfig& config, Subcommand subcommand);

std::string report_to_string(const nlohmann::json& report);

}  // namespace rkhsmult
