#include "rkhsmult/report.hpp"

#include <sstream>

#include "rkhsmult/expr.hpp"
#include "rkhsmult/verify.hpp"
#include "rkhsmult/version.hpp"

namespace rkhsmult {

namespace {

template <class S>
nlohmann::json scalar_json(const S& v) {
  auto [re, im] = scalar_traits<S>::serialize(v);
  return nlohmann::json::array({re, im});
}

template <class S>
nlohmann::json point_json(const std::vector<S>& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const S& c : w) out.push_back(scalar_json(c));
  return out;
}

template <class S>
std::string point_csv(const std::vector<S>& w) {
  std::string out;
  for (const S& c : w) {
    auto [re, im] = scalar_traits<S>::serialize(c);
    if (!out.empty()) out += "|";
    out += re + "+" + im + "i";
  }
  return out;
}

nlohmann::json residual_json(const ResidualSample& r) {
  nlohmann::json out;
  out["residual"] = r.residual;
  // null when the empirical ratio cannot certify a tail (rho * R >= 1)
  if (std::isfinite(r.tail_band))
    out["tail_band"] = r.tail_band;
  else
    out["tail_band"] = nullptr;
  if (r.residual_sq_exact) out["residual_sq_exact"] = rational_to_string(*r.residual_sq_exact);
  if (r.residual_exact) out["residual_exact"] = rational_to_string(*r.residual_exact);
  return out;
}

nlohmann::json hypothesis_json(const HypothesisFlags& flags) {
  nlohmann::json out;
  out["lambda_one_ok"] = flags.lambda_one_ok;
  out["norm_bound_not_refuted"] = flags.norm_bound_not_refuted;
  out["norm_sq_truncated"] = flags.norm_sq_truncated;
  if (flags.norm_sq_exact) out["norm_sq_exact"] = rational_to_string(*flags.norm_sq_exact);
  return out;
}

template <class S>
nlohmann::json criterion_json(const CriterionReport<S>& report) {
  nlohmann::json out;
  out["criterion_kind"] = report.criterion_kind;
  out["mode"] = report.mode;
  if (report.criterion_kind == "power") out["p"] = report.p;
  out["tolerance"] = report.tolerance;
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& w : report.sample_points) samples.push_back(point_json(w));
  for (const auto& [y, t] : report.sample_point_pairs)
    samples.push_back(nlohmann::json{{"y", point_json(y)}, {"t", point_json(t)}});
  out["sample_points"] = samples;
  nlohmann::json residuals = nlohmann::json::array();
  for (const ResidualSample& r : report.residuals) residuals.push_back(residual_json(r));
  out["residuals"] = residuals;
  out["max_residual"] = report.max_residual;
  out["hypothesis"] = hypothesis_json(report.hypothesis);
  out["verdict"] = verdict_name(report.verdict);
  return out;
}

template <class S>
nlohmann::json brute_json(const MultiplicativityReport<S>& report) {
  nlohmann::json out;
  out["mode"] = report.mode;
  out["max_degree"] = report.max_degree;
  out["multiplicative"] = report.multiplicative;
  out["power_rule_holds"] = report.power_rule_holds;
  if (report.witness) {
    out["witness"] = {multi_index_to_string(report.witness->first),
                      multi_index_to_string(report.witness->second)};
    out["witness_degree"] = *report.witness_degree;
  }
  if (report.power_rule_witness)
    out["power_rule_witness"] = multi_index_to_string(*report.power_rule_witness);
  return out;
}

nlohmann::json sweep_json(const IdentitySweepReport& sweep) {
  nlohmann::json out;
  out["variant"] = sweep.variant;
  out["p"] = sweep.p;
  out["max_degree"] = sweep.max_degree;
  out["checked"] = sweep.checked;
  out["all_equal"] = sweep.all_equal;
  out["mode"] = "exact";
  if (sweep.first_failure) {
    out["first_failure"] = multi_index_to_string(*sweep.first_failure);
    out["first_failure_degree"] = *sweep.first_failure_degree;
  }
  return out;
}

nlohmann::json tensor_sweep_json(const TensorIdentitySweepReport& sweep) {
  nlohmann::json out;
  out["variant"] = "tensor";
  out["max_degree"] = sweep.max_degree;
  out["checked"] = sweep.checked;
  out["all_equal"] = sweep.all_equal;
  out["mode"] = "exact";
  if (sweep.first_failure) {
    out["first_failure"] = {multi_index_to_string(sweep.first_failure->first),
                            multi_index_to_string(sweep.first_failure->second)};
    out["first_failure_degree"] = *sweep.first_failure_degree;
  }
  return out;
}

nlohmann::json cnp_json(const Kernel& k, const CnpData& cnp) {
  nlohmann::json out;
  out["kernel"] = k.label();
  out["truncation_degree"] = k.truncation_degree();
  nlohmann::json table = nlohmann::json::array();
  for (int n = 0; n <= cnp.b_series.truncation_degree(); ++n)
    table.push_back(rational_to_string(cnp.b_series[n]));
  out["b_table"] = table;
  out["is_cnp_up_to_truncation"] = cnp.is_cnp_up_to_truncation;
  out["is_normalized"] = cnp.is_normalized;
  if (cnp.first_negative_index) out["first_negative_index"] = *cnp.first_negative_index;
  out["note"] = "negative b_n is conclusive; nonnegativity up to N is evidence only";
  return out;
}

struct Tally {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int inconclusive = 0;

  void add(Verdict v) {
    ++total;
    if (v == Verdict::Pass) ++passed;
    else if (v == Verdict::Fail) ++failed;
    else ++inconclusive;
  }
};

template <class S>
class Runner {
public:
  Runner(const JobConfig& config, const std::vector<CheckSpec>& checks)
      : config_(config), checks_(checks) {
    for (const auto& [name, expr] : config.kernels)
      kernels_.emplace(name, parse_kernel_expr(expr, config.truncation_degree));
    for (const auto& [name, expr] : config.functionals)
      functionals_.emplace(name, parse_functional_expr(expr));
    csv_ = "check_index,check_type,kernel,functional,sample_index,sample,residual,tail_band\n";
  }

  void run(nlohmann::json& entries, Tally& tally) {
    int index = 0;
    for (const CheckSpec& spec : checks_) {
      nlohmann::json entry;
      entry["type"] = check_type_name(spec.type);
      entry["kernel"] = spec.kernel;
      if (!spec.kernel2.empty()) entry["kernel2"] = spec.kernel2;
      if (!spec.functional.empty()) entry["functional"] = spec.functional;
      Verdict verdict = dispatch(spec, entry, index);
      entry["verdict"] = verdict_name(verdict);
      tally.add(verdict);
      entries.push_back(entry);
      ++index;
    }
  }

  const std::string& csv() const { return csv_; }

private:
  double tol() const { return to_double(config_.tolerance); }

  const KernelVariant& kernel_variant(const std::string& name) const {
    return kernels_.at(name);
  }

  const Kernel& plain_kernel(const std::string& name) const {
    const KernelVariant& v = kernel_variant(name);
    if (!std::holds_alternative<Kernel>(v))
      fail(ErrorKind::Config, "check needs a plain (non-tensor) kernel, got '" + name + "'");
    return std::get<Kernel>(v);
  }

  TensorKernel tensor_for(const CheckSpec& spec) const {
    if (!spec.kernel2.empty())
      return tensor_kernel(plain_kernel(spec.kernel), plain_kernel(spec.kernel2));
    const KernelVariant& v = kernel_variant(spec.kernel);
    if (std::holds_alternative<TensorKernel>(v)) return std::get<TensorKernel>(v);
    fail(ErrorKind::Config,
         "tensor check needs a tensor kernel or a kernel2 reference");
  }

  const FunctionalSpec& functional_spec(const std::string& name) const {
    return functionals_.at(name);
  }

  std::vector<S> base_scalars() const {
    std::vector<S> out;
    auto list = config_.base_points.empty() ? default_base_scalars() : config_.base_points;
    for (const auto& [re, im] : list) out.push_back(scalar_traits<S>::from_parts(re, im));
    if constexpr (!scalar_traits<S>::is_exact) {
      if (config_.dense)
        for (const auto& z : dense_base_scalars()) out.push_back(z);
    }
    return out;
  }

  std::vector<std::vector<S>> sample_points(int dimension) const {
    std::vector<std::vector<S>> out;
    for (const S& t : base_scalars()) out.push_back(spread_into_ball(t, dimension));
    return out;
  }

  std::vector<std::pair<std::vector<S>, std::vector<S>>> tensor_samples(int dimension) const {
    auto base = sample_points(dimension);
    std::vector<std::pair<std::vector<S>, std::vector<S>>> out;
    for (std::size_t i = 0; i < base.size(); ++i)
      out.emplace_back(base[i], base[(i + 3) % base.size()]);
    return out;
  }

  void append_csv(int index, const CheckSpec& spec, const CriterionReport<S>& report) {
    for (std::size_t i = 0; i < report.residuals.size(); ++i) {
      std::string sample = i < report.sample_points.size()
                               ? point_csv(report.sample_points[i])
                               : point_csv(report.sample_point_pairs[i].first) + ";" +
                                     point_csv(report.sample_point_pairs[i].second);
      csv_ += std::to_string(index) + "," + check_type_name(spec.type) + "," + spec.kernel +
              "," + spec.functional + "," + std::to_string(i) + "," + sample + "," +
              double_to_string(report.residuals[i].residual) + "," +
              double_to_string(report.residuals[i].tail_band) + "\n";
    }
  }

  Verdict dispatch(const CheckSpec& spec, nlohmann::json& entry, int index) {
    switch (spec.type) {
      case CheckType::Cnp: {
        const KernelVariant& v = kernel_variant(spec.kernel);
        bool is_cnp;
        if (std::holds_alternative<TensorKernel>(v)) {
          // tensor products are not unitarily invariant; report per factor
          const TensorKernel& tk = std::get<TensorKernel>(v);
          CnpData left = cnp_transform(tk.left);
          CnpData right = cnp_transform(tk.right);
          entry["result"] = {{"left", cnp_json(tk.left, left)},
                             {"right", cnp_json(tk.right, right)}};
          is_cnp = left.is_cnp_up_to_truncation && right.is_cnp_up_to_truncation;
        } else {
          const Kernel& k = std::get<Kernel>(v);
          CnpData cnp = cnp_transform(k);
          entry["result"] = cnp_json(k, cnp);
          is_cnp = cnp.is_cnp_up_to_truncation;
        }
        if (spec.expect_cnp)
          return is_cnp == *spec.expect_cnp ? Verdict::Pass : Verdict::Fail;
        return Verdict::Pass;  // informational
      }
      case CheckType::PowerCriterion: {
        const Kernel& k = plain_kernel(spec.kernel);
        auto f = make_functional<S>(functional_spec(spec.functional), k);
        auto report = check_power_criterion(f, k, spec.p, sample_points(k.dimension()), tol());
        entry["result"] = criterion_json(report);
        append_csv(index, spec, report);
        return report.verdict;
      }
      case CheckType::SchurCriterion: {
        if (spec.kernel2.empty())
          fail(ErrorKind::Config, "schur_criterion needs kernel and kernel2 factor references");
        const Kernel& k1 = plain_kernel(spec.kernel);
        const Kernel& k2 = plain_kernel(spec.kernel2);
        auto f = make_functional<S>(functional_spec(spec.functional), schur_product(k1, k2));
        auto report = check_schur_criterion(f, k1, k2, sample_points(k1.dimension()), tol());
        entry["result"] = criterion_json(report);
        append_csv(index, spec, report);
        return report.verdict;
      }
      case CheckType::TensorCriterion: {
        TensorKernel k = tensor_for(spec);
        auto f = make_tensor_functional<S>(functional_spec(spec.functional), k);
        auto report = check_tensor_criterion(f, k, tensor_samples(k.left.dimension()), tol());
        entry["result"] = criterion_json(report);
        append_csv(index, spec, report);
        return report.verdict;
      }
      case CheckType::BruteForce: {
        const KernelVariant& v = kernel_variant(spec.kernel);
        MultiplicativityReport<S> report;
        if (std::holds_alternative<TensorKernel>(v)) {
          auto f = make_tensor_functional<S>(functional_spec(spec.functional),
                                             std::get<TensorKernel>(v));
          report = brute_force_multiplicative(f.as_functional_2d(), spec.max_degree, tol());
        } else {
          auto f = make_functional<S>(functional_spec(spec.functional), std::get<Kernel>(v));
          report = brute_force_multiplicative(f, spec.max_degree, tol());
        }
        entry["result"] = brute_json(report);
        return report.multiplicative && report.power_rule_holds ? Verdict::Pass
                                                                : Verdict::Fail;
      }
      case CheckType::Identity: {
        if constexpr (!scalar_traits<S>::is_exact) {
          fail(ErrorKind::NonRationalValues,
               "coefficient identities require exact mode (mode = \"exact\")");
        } else {
          const KernelVariant& v = kernel_variant(spec.kernel);
          if (std::holds_alternative<TensorKernel>(v)) {
            const TensorKernel& tk = std::get<TensorKernel>(v);
            auto f = make_tensor_functional<S>(functional_spec(spec.functional), tk);
            auto sweep = tensor_identity_sweep(f, tk.left, tk.right, spec.max_degree);
            entry["result"] = tensor_sweep_json(sweep);
            return sweep.all_equal ? Verdict::Pass : Verdict::Fail;
          }
          const Kernel& k = std::get<Kernel>(v);
          auto f = make_functional<S>(functional_spec(spec.functional), k);
          auto sweep = identity_sweep(f, k, spec.p, spec.max_degree);
          entry["result"] = sweep_json(sweep);
          return sweep.all_equal ? Verdict::Pass : Verdict::Fail;
        }
      }
      case CheckType::Norm: {
        const KernelVariant& v = kernel_variant(spec.kernel);
        nlohmann::json result;
        if (std::holds_alternative<TensorKernel>(v)) {
          const TensorKernel& tk = std::get<TensorKernel>(v);
          auto f = make_tensor_functional<S>(functional_spec(spec.functional), tk);
          auto norm_sq = tensor_norm_sq_truncated(f, tk);
          result["norm_sq_truncated"] = scalar_traits<S>::real_to_double(norm_sq);
          if constexpr (scalar_traits<S>::is_exact)
            result["norm_sq_exact"] = rational_to_string(norm_sq);
        } else {
          const Kernel& k = std::get<Kernel>(v);
          auto f = make_functional<S>(functional_spec(spec.functional), k);
          auto norm_sq = functional_norm_sq_truncated(f, k);
          result["norm_sq_truncated"] = scalar_traits<S>::real_to_double(norm_sq);
          if constexpr (scalar_traits<S>::is_exact)
            result["norm_sq_exact"] = rational_to_string(norm_sq);
        }
        result["mode"] = scalar_traits<S>::mode_name();
        result["note"] = "monotone lower bound of the true squared norm";
        entry["result"] = result;
        return Verdict::Pass;  // informational
      }
      case CheckType::EquivalenceSuite: {
        if constexpr (!scalar_traits<S>::is_exact) {
          fail(ErrorKind::NonRationalValues,
               "equivalence_suite requires exact mode (mode = \"exact\")");
        } else {
          const Kernel& k = plain_kernel(spec.kernel);
          auto f = make_functional<S>(functional_spec(spec.functional), k);
          auto suite = equivalence_suite(f, k, spec.p, spec.max_degree,
                                         sample_points(k.dimension()), tol());
          nlohmann::json result;
          result["brute_force"] = brute_json(suite.brute);
          result["identity"] = sweep_json(suite.identity);
          result["criterion"] = criterion_json(suite.criterion);
          result["legs_agree"] = suite.legs_agree;
          result["caveats"] = suite.caveats;
          entry["result"] = result;
          append_csv(index, spec, suite.criterion);
          return suite.combined_verdict;
        }
      }
    }
    fail(ErrorKind::Config, "unhandled check type");
  }

  const JobConfig& config_;
  const std::vector<CheckSpec>& checks_;
  std::map<std::string, KernelVariant> kernels_;
  std::map<std::string, FunctionalSpec> functionals_;
  std::string csv_;
};

std::vector<CheckSpec> select_checks(const JobConfig& config, Subcommand sub) {
  auto type_matches = [sub](CheckType t) {
    switch (sub) {
      case Subcommand::Report: return true;
      case Subcommand::Cnp: return t == CheckType::Cnp;
      case Subcommand::Verify:
        return t == CheckType::PowerCriterion || t == CheckType::SchurCriterion ||
               t == CheckType::TensorCriterion || t == CheckType::EquivalenceSuite;
      case Subcommand::Norm: return t == CheckType::Norm;
      case Subcommand::Identity:
        return t == CheckType::Identity || t == CheckType::BruteForce;
    }
    return false;
  };
  std::vector<CheckSpec> out;
  for (const CheckSpec& spec : config.checks)
    if (type_matches(spec.type)) out.push_back(spec);

  // `cnp` with no explicit entries falls back to one transform per kernel.
  if (out.empty() && sub == Subcommand::Cnp) {
    for (const auto& [name, expr] : config.kernels) {
      CheckSpec spec;
      spec.type = CheckType::Cnp;
      spec.kernel = name;
      out.push_back(spec);
    }
  }
  if (out.empty())
    fail(ErrorKind::Config, "no checks in the config match this subcommand");
  return out;
}

}  // namespace

RunResult run_job(const JobConfig& config, Subcommand subcommand) {
  std::vector<CheckSpec> checks = select_checks(config, subcommand);

  RunResult result;
  nlohmann::json entries = nlohmann::json::array();
  Tally tally;

  if (config.mode == ArithmeticMode::Exact) {
    Runner<GaussianRational> runner(config, checks);
    runner.run(entries, tally);
    result.csv = runner.csv();
  } else {
    Runner<std::complex<double>> runner(config, checks);
    runner.run(entries, tally);
    result.csv = runner.csv();
  }

  nlohmann::json doc;
  doc["tool"] = {{"name", kToolName},
                 {"version", kToolVersion},
                 {"report_schema", kReportSchemaVersion}};
  doc["config"] = config_to_json(config);
  doc["notes"] = {
      {"tail_estimate_method",
       "empirical coefficient-ratio geometric bound; heuristic estimate, not a proof"},
      {"cnp_verdict",
       "negative b_n is conclusive; nonnegativity up to N is evidence only"},
      {"norm_semantics",
       "truncated norms are monotone lower bounds; the norm-1 hypothesis can only be refuted"}};
  doc["checks"] = entries;
  bool pass = tally.failed == 0;
  doc["summary"] = {{"verdict", pass ? "pass" : "fail"},
                    {"total", tally.total},
                    {"passed", tally.passed},
                    {"failed", tally.failed},
                    {"inconclusive", tally.inconclusive}};
  result.report = doc;
  result.exit_code = pass ? 0 : 1;
  return result;
}

std::string report_to_string(const nlohmann::json& report) { return report.dump(2) + "\n"; }

}  // namespace rkhsmult
