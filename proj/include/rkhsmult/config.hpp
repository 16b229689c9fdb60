#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rkhsmult/rational.hpp"

namespace rkhsmult {

enum class ArithmeticMode { Exact, Float };

inline const char* mode_name(ArithmeticMode m) {
  return m == ArithmeticMode::Exact ? "exact" : "float";
}

enum class CheckType {
  Cnp,
  PowerCriterion,
  SchurCriterion,
  TensorCriterion,
  BruteForce,
  Identity,
  Norm,
  EquivalenceSuite,
};

const char* check_type_name(CheckType t);

struct CheckSpec {
  CheckType type = CheckType::Cnp;
  std::string kernel;       // primary kernel reference
  std::string kernel2;      // second factor for schur/tensor given as two refs
  std::string functional;   // functional reference (unused by cnp)
  int p = 1;                // power criterion / identity exponent
  int max_degree = 4;       // brute force / identity / suite degree bound
  std::optional<bool> expect_cnp;  // optional asserted cnp verdict
};

/// Parsed and validated job description. Name references are resolved
/// against the declared kernels/functionals; declaration order is kept
/// for deterministic reports.
struct JobConfig {
  ArithmeticMode mode = ArithmeticMode::Exact;
  int truncation_degree = 24;
  Rational tolerance = Rational(1, 1000000000);
  std::vector<std::pair<std::string, std::string>> kernels;
  std::vector<std::pair<std::string, std::string>> functionals;
  std::vector<std::pair<Rational, Rational>> base_points;  // empty = default grid
  bool dense = false;
  std::vector<CheckSpec> checks;
};

JobConfig parse_config(const nlohmann::json& doc);
JobConfig load_config_file(const std::string& path);

/// Re-checks the cross-field invariants (degree headroom, positive
/// tolerance, dense-sweep mode); parse_config calls this, and the CLI
/// calls it again after applying command-line overrides.
void validate_config(const JobConfig& config);

/// Canonical echo of the configuration, embedded in every report.
nlohmann::json config_to_json(const JobConfig& config);

}  // namespace rkhsmult
