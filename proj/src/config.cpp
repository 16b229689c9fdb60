#include "rkhsmult/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace rkhsmult {

const char* check_type_name(CheckType t) {
  switch (t) {
    case CheckType::Cnp: return "cnp";
    case CheckType::PowerCriterion: return "power_criterion";
    case CheckType::SchurCriterion: return "schur_criterion";
    case CheckType::TensorCriterion: return "tensor_criterion";
    case CheckType::BruteForce: return "brute_force";
    case CheckType::Identity: return "identity";
    case CheckType::Norm: return "norm";
    case CheckType::EquivalenceSuite: return "equivalence_suite";
  }
  return "?";
}

namespace {

CheckType check_type_from_name(const std::string& name) {
  for (CheckType t :
       {CheckType::Cnp, CheckType::PowerCriterion, CheckType::SchurCriterion,
        CheckType::TensorCriterion, CheckType::BruteForce, CheckType::Identity,
        CheckType::Norm, CheckType::EquivalenceSuite})
    if (name == check_type_name(t)) return t;
  fail(ErrorKind::Config, "unknown check type '" + name + "'");
}

Rational rational_from_json(const nlohmann::json& v, const std::string& what) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_float()) return Rational(v.get<double>());
  } catch (const Error& e) {
    fail(ErrorKind::Config, "bad " + what + ": " + e.what());
  }
  fail(ErrorKind::Config, what + " must be a number or a rational string");
}

}  // namespace

JobConfig parse_config(const nlohmann::json& doc) {
  if (!doc.is_object()) fail(ErrorKind::Config, "config must be a JSON object");
  JobConfig config;

  if (doc.contains("mode")) {
    std::string mode = doc.at("mode").get<std::string>();
    if (mode == "exact")
      config.mode = ArithmeticMode::Exact;
    else if (mode == "float")
      config.mode = ArithmeticMode::Float;
    else
      fail(ErrorKind::Config, "mode must be 'exact' or 'float', got '" + mode + "'");
  }
  if (doc.contains("truncation_degree"))
    config.truncation_degree = doc.at("truncation_degree").get<int>();
  if (doc.contains("tolerance"))
    config.tolerance = rational_from_json(doc.at("tolerance"), "tolerance");

  std::set<std::string> kernel_names, functional_names;
  if (doc.contains("kernels")) {
    for (const auto& [name, expr] : doc.at("kernels").items()) {
      if (!expr.is_string()) fail(ErrorKind::Config, "kernel expressions must be strings");
      config.kernels.emplace_back(name, expr.get<std::string>());
      kernel_names.insert(name);
    }
  }
  if (doc.contains("functionals")) {
    for (const auto& [name, expr] : doc.at("functionals").items()) {
      if (!expr.is_string()) fail(ErrorKind::Config, "functional expressions must be strings");
      config.functionals.emplace_back(name, expr.get<std::string>());
      functional_names.insert(name);
    }
  }

  if (doc.contains("samples")) {
    const auto& samples = doc.at("samples");
    config.dense = samples.value("dense", false);
    if (samples.contains("base_points")) {
      for (const auto& point : samples.at("base_points")) {
        if (point.is_string()) {
          config.base_points.emplace_back(parse_rational(point.get<std::string>()), Rational(0));
        } else if (point.is_array() && point.size() == 2) {
          config.base_points.emplace_back(
              rational_from_json(point.at(0), "sample point"),
              rational_from_json(point.at(1), "sample point"));
        } else {
          fail(ErrorKind::Config, "sample points are \"re\" strings or [re, im] pairs");
        }
      }
    }
  }

  if (!doc.contains("checks") || !doc.at("checks").is_array())
    fail(ErrorKind::Config, "config needs a 'checks' array");
  for (const auto& entry : doc.at("checks")) {
    CheckSpec spec;
    spec.type = check_type_from_name(entry.at("type").get<std::string>());
    spec.kernel = entry.value("kernel", "");
    spec.kernel2 = entry.value("kernel2", "");
    spec.functional = entry.value("functional", "");
    spec.p = entry.value("p", 1);
    spec.max_degree = entry.value("max_degree", 4);
    if (entry.contains("expect_cnp")) spec.expect_cnp = entry.at("expect_cnp").get<bool>();

    if (spec.p < 1) fail(ErrorKind::Config, "check exponent p must be >= 1");
    if (spec.max_degree < 1) fail(ErrorKind::Config, "max_degree must be >= 1");
    if (spec.kernel.empty()) fail(ErrorKind::Config, "every check names a kernel");
    if (!kernel_names.count(spec.kernel))
      fail(ErrorKind::Config, "check references unknown kernel '" + spec.kernel + "'");
    if (!spec.kernel2.empty() && !kernel_names.count(spec.kernel2))
      fail(ErrorKind::Config, "check references unknown kernel '" + spec.kernel2 + "'");
    bool needs_functional = spec.type != CheckType::Cnp;
    if (needs_functional) {
      if (spec.functional.empty())
        fail(ErrorKind::Config, std::string("check '") + check_type_name(spec.type) +
                                    "' names a functional");
      if (!functional_names.count(spec.functional))
        fail(ErrorKind::Config,
             "check references unknown functional '" + spec.functional + "'");
    }
    config.checks.push_back(std::move(spec));
  }
  validate_config(config);
  return config;
}

void validate_config(const JobConfig& config) {
  if (config.truncation_degree < 2 || config.truncation_degree > 512)
    fail(ErrorKind::Config, "truncation_degree must lie in [2, 512]");
  if (config.tolerance <= 0) fail(ErrorKind::Config, "tolerance must be positive");
  if (config.dense && config.mode == ArithmeticMode::Exact)
    fail(ErrorKind::Config, "the dense sweep uses non-rational angles; use mode float");
  for (const auto& [re, im] : config.base_points)
    if (re * re + im * im > Rational(1, 4))
      fail(ErrorKind::Config, "custom base points must keep |t| <= 1/2");
  for (const CheckSpec& spec : config.checks) {
    bool degree_bounded = spec.type == CheckType::BruteForce ||
                          spec.type == CheckType::Identity ||
                          spec.type == CheckType::EquivalenceSuite;
    if (degree_bounded && config.truncation_degree < 2 * spec.max_degree)
      fail(ErrorKind::Config, "truncation_degree must be >= 2 * max_degree (got N = " +
                                  std::to_string(config.truncation_degree) +
                                  ", max_degree = " + std::to_string(spec.max_degree) + ")");
  }
}

JobConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Config, "cannot open config '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Config, "malformed JSON in '" + path + "': " + e.what());
  }
  return parse_config(doc);
}

nlohmann::json config_to_json(const JobConfig& config) {
  nlohmann::json out;
  out["mode"] = mode_name(config.mode);
  out["truncation_degree"] = config.truncation_degree;
  out["tolerance"] = rational_to_string(config.tolerance);
  nlohmann::json kernels = nlohmann::json::object();
  for (const auto& [name, expr] : config.kernels) kernels[name] = expr;
  out["kernels"] = kernels;
  nlohmann::json functionals = nlohmann::json::object();
  for (const auto& [name, expr] : config.functionals) functionals[name] = expr;
  out["functionals"] = functionals;
  nlohmann::json samples;
  samples["dense"] = config.dense;
  nlohmann::json points = nlohmann::json::array();
  for (const auto& [re, im] : config.base_points)
    points.push_back({rational_to_string(re), rational_to_string(im)});
  samples["base_points"] = points;
  samples["grid"] = config.base_points.empty() ? "default" : "custom";
  out["samples"] = samples;
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckSpec& spec : config.checks) {
    nlohmann::json c;
    c["type"] = check_type_name(spec.type);
    c["kernel"] = spec.kernel;
    if (!spec.kernel2.empty()) c["kernel2"] = spec.kernel2;
    if (!spec.functional.empty()) c["functional"] = spec.functional;
    c["p"] = spec.p;
    c["max_degree"] = spec.max_degree;
    if (spec.expect_cnp) c["expect_cnp"] = *spec.expect_cnp;
    checks.push_back(c);
  }
  out["checks"] = checks;
  return out;
}

}  // namespace rkhsmult
