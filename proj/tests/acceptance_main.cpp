// Acceptance suite: runs each criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Usage:
//   acceptance <path-to-rkhsmult-binary> <path-to-demo-config>
// (both arguments are needed only by the determinism criterion).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "rkhsmult/verify.hpp"

using namespace rkhsmult;
using Complex = std::complex<double>;
using GQ = GaussianRational;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int number;
  std::string name;
  std::function<bool(std::string&)> run;
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool require(bool condition, std::string& detail, const std::string& message) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

std::vector<Rational> reciprocal_recurrence_oracle(const RationalSeries& a) {
  std::vector<Rational> c{Rational(1)};
  for (int n = 1; n <= a.truncation_degree(); ++n) {
    Rational sum(0);
    for (int j = 1; j <= n; ++j) sum += a[j] * c[static_cast<std::size_t>(n - j)];
    c.push_back(-sum);
  }
  return c;
}

Functional<GQ> multiplicative_fixture(int dimension, int degree, const std::vector<GQ>& v) {
  std::map<MultiIndex, GQ> values;
  for (const MultiIndex& alpha : multi_indices_up_to(dimension, degree))
    values.emplace(alpha, monomial_value(v, alpha));
  return Functional<GQ>(dimension, degree, std::move(values), "multiplicative");
}

// --- criterion 1: CNP transform exactness at N = 50 --------------------------

bool criterion_cnp_exactness(std::string& detail) {
  auto start = Clock::now();
  auto szego_cnp = cnp_transform(Kernel::szego(50));
  bool ok = require(szego_cnp.is_cnp_up_to_truncation, detail, "szego must be CNP");
  ok &= require(szego_cnp.b_series[1] == 1, detail, "szego b_1 != 1");
  for (int n = 2; n <= 50 && ok; ++n)
    ok &= require(szego_cnp.b_series[n] == 0, detail,
                  "szego b_" + std::to_string(n) + " != 0");

  auto bergman_cnp = cnp_transform(kernel_power(Kernel::szego(50), 2));
  ok &= require(!bergman_cnp.is_cnp_up_to_truncation, detail, "szego^2 must not be CNP");
  ok &= require(bergman_cnp.b_series[2] == -1, detail, "szego^2 b_2 != -1");
  ok &= require(bergman_cnp.first_negative_index.has_value() &&
                    *bergman_cnp.first_negative_index == 2,
                detail, "first negative index != 2");
  double elapsed = ms_since(start);
  ok &= require(elapsed < 1000.0, detail,
                "runtime " + std::to_string(elapsed) + " ms exceeds 1 s");
  return ok;
}

// --- criterion 2: Dirichlet CNP evidence against the recurrence oracle -------

bool criterion_dirichlet_evidence(std::string& detail) {
  auto start = Clock::now();
  auto dirichlet = Kernel::dirichlet(50);
  auto cnp = cnp_transform(dirichlet);
  bool ok = require(cnp.b_series[1] == Rational(1, 2), detail, "b_1 != 1/2");
  ok &= require(cnp.b_series[2] == Rational(1, 12), detail, "b_2 != 1/12");
  auto oracle = reciprocal_recurrence_oracle(dirichlet.a_series());
  for (int n = 1; n <= 50 && ok; ++n) {
    ok &= require(cnp.b_series[n] == -oracle[static_cast<std::size_t>(n)], detail,
                  "b_" + std::to_string(n) + " disagrees with the recurrence oracle");
    ok &= require(cnp.b_series[n] >= 0, detail, "b_" + std::to_string(n) + " < 0");
  }
  ok &= require(cnp.is_cnp_up_to_truncation, detail, "dirichlet flagged non-CNP");
  double elapsed = ms_since(start);
  ok &= require(elapsed < 1000.0, detail,
                "runtime " + std::to_string(elapsed) + " ms exceeds 1 s");
  return ok;
}

// --- criterion 3: counterexample reproduction --------------------------------

bool criterion_counterexample(std::string& detail) {
  auto start = Clock::now();
  auto szego = Kernel::szego(24);
  auto cex = counterexample_functional<GQ>(24);
  bool ok = true;

  for (const GQ& w : {GQ(Rational(1, 2)), GQ(Rational(-2, 7)), GQ(Rational(1, 5), Rational(1, 3))}) {
    GQ expected = GQ(Rational(1)) + w.conj();
    ok &= require(apply_to_kernel_function(cex, szego, {w}) == expected, detail,
                  "Lambda(k_w) != 1 + conj(w)");
  }

  auto brute = brute_force_multiplicative(cex, 5);
  ok &= require(!brute.multiplicative, detail, "brute force unexpectedly passed");
  ok &= require(brute.witness_degree.has_value() && *brute.witness_degree == 2, detail,
                "brute-force witness degree != 2");

  auto report =
      check_power_criterion(cex, szego, 1, {{GQ(Rational(1, 2))}}, 1e-9);
  ok &= require(report.residuals.size() == 1 &&
                    report.residuals[0].residual_exact.has_value() &&
                    *report.residuals[0].residual_exact == Rational(1, 4),
                detail, "residual at w = 1/2 is not exactly 1/4");
  ok &= require(report.verdict == Verdict::Fail, detail, "criterion verdict not fail");

  auto suite = equivalence_suite(cex, szego, 1, 5, default_sample_points<GQ>(1), 1e-9);
  ok &= require(!suite.brute.multiplicative, detail, "suite brute leg passed");
  ok &= require(!suite.identity.all_equal, detail, "suite identity leg passed");
  ok &= require(suite.criterion.verdict == Verdict::Fail, detail, "suite criterion leg passed");
  ok &= require(suite.combined_verdict == Verdict::Fail, detail, "suite verdict not fail");

  double elapsed = ms_since(start);
  ok &= require(elapsed < 1000.0, detail,
                "runtime " + std::to_string(elapsed) + " ms exceeds 1 s");
  return ok;
}

// --- criterion 4: theorem equivalence at desk scale ---------------------------

bool criterion_equivalence_desk_scale(std::string& detail) {
  auto start = Clock::now();
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> numerator(-3, 3);
  std::uniform_int_distribution<int> denominator(2, 9);
  auto random_value = [&] {
    return GQ(Rational(numerator(rng), denominator(rng)),
              Rational(numerator(rng), denominator(rng)));
  };

  auto szego = Kernel::szego(10);
  auto dirichlet = Kernel::dirichlet(10);
  auto da2 = Kernel::drury_arveson(2, 10);
  const int max_degree = 5;
  const int total = 100;

  int disagreements = 0;
  int checked = 0;
  for (int i = 0; i < total; ++i) {
    bool multiplicative = i < total / 2;
    int dimension = i % 2 + 1;
    const Kernel& k = dimension == 2 ? da2 : (i % 4 < 2 ? szego : dirichlet);

    std::vector<GQ> v;
    for (int j = 0; j < dimension; ++j) v.push_back(random_value());
    auto values = multiplicative_fixture(dimension, 10, v).values();
    if (!multiplicative) {
      std::vector<MultiIndex> eligible;
      for (const MultiIndex& alpha : multi_indices_up_to(dimension, max_degree))
        if (alpha.degree() >= 2) eligible.push_back(alpha);
      std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
      values[eligible[pick(rng)]] =
          values[eligible[pick(rng)]] + GQ(Rational(1, 11), Rational(1, 17));
    }
    Functional<GQ> f(dimension, 10, std::move(values), "fixture");

    bool brute_ok = brute_force_multiplicative(f, max_degree).multiplicative;
    for (int p : {1, 2, 3}) {
      bool identity_ok = identity_sweep(f, k, p, max_degree).all_equal;
      ++checked;
      if (identity_ok != brute_ok) ++disagreements;
    }
    if (brute_ok != multiplicative) ++disagreements;  // construction sanity
  }

  bool ok = require(disagreements == 0, detail,
                    std::to_string(disagreements) + " disagreements in " +
                        std::to_string(checked) + " instances");
  double elapsed = ms_since(start);
  ok &= require(elapsed < 60000.0, detail,
                "runtime " + std::to_string(elapsed) + " ms exceeds 60 s");
  return ok;
}

// --- criterion 5: dual-route consistency --------------------------------------

bool criterion_dual_route(std::string& detail) {
  std::vector<Kernel> kernels{Kernel::szego(24), Kernel::drury_arveson(2, 24),
                              Kernel::drury_arveson(3, 24), Kernel::dirichlet(24)};
  bool ok = true;
  for (const Kernel& k : kernels) {
    std::vector<std::vector<Complex>> points;
    for (const auto& w : default_sample_points<Complex>(k.dimension())) {
      if (std::sqrt(point_norm_sq(w)) <= 0.4) points.push_back(w);
    }
    std::vector<Complex> v;
    for (int j = 0; j < k.dimension(); ++j)
      v.push_back(Complex(0.3 / (j + 1), 0.1 / (j + 1)));
    auto f = point_evaluation(k, v);
    for (int p : {1, 2, 3}) {
      for (const auto& w : points) {
        Complex route = apply_series_route(f, k, p, w);
        Complex direct = apply_to_kernel_power(f, k, p, w);
        ok &= require(std::abs(route - direct) <= 1e-9, detail,
                      "route mismatch " + std::to_string(std::abs(route - direct)) +
                          " for " + k.label() + ", p = " + std::to_string(p));
      }
    }
  }
  return ok;
}

// --- criterion 6: schur/power coherence ----------------------------------------

bool criterion_schur_power_coherence(std::string& detail) {
  auto szego = Kernel::szego(24);
  auto samples = default_sample_points<Complex>(1);
  std::vector<Functional<Complex>> fixtures{
      counterexample_functional<Complex>(24),
      point_evaluation(szego, std::vector<Complex>{Complex(0.3, 0.1)}),
      point_evaluation(szego, std::vector<Complex>{Complex(0, 0)}),
      boundary_limit_ones<Complex>(1, 24),
  };
  bool ok = true;
  for (const auto& f : fixtures) {
    auto schur = check_schur_criterion(f, szego, szego, samples, 1e-9);
    auto power = check_power_criterion(f, szego, 2, samples, 1e-9);
    ok &= require(schur.residuals.size() == power.residuals.size(), detail,
                  "sample counts differ");
    for (std::size_t i = 0; i < schur.residuals.size() && ok; ++i) {
      double diff = std::abs(schur.residuals[i].residual - power.residuals[i].residual);
      ok &= require(diff <= 1e-12, detail,
                    "residual difference " + std::to_string(diff) + " at sample " +
                        std::to_string(i));
    }
  }
  return ok;
}

// --- criterion 7: tensor criterion on the polydisc Hardy space ------------------

bool criterion_tensor_polydisc(std::string& detail) {
  TensorKernel hardy2 = tensor_kernel(Kernel::szego(24), Kernel::szego(24));
  auto origin = tensor_point_evaluation(hardy2, std::vector<GQ>{GQ(Rational(0))},
                                        std::vector<GQ>{GQ(Rational(0))});
  auto pass_report =
      check_tensor_criterion(origin, hardy2, default_tensor_sample_points<GQ>(1), 1e-9);
  bool ok = require(pass_report.verdict == Verdict::Pass, detail,
                    "origin tensor evaluation did not pass");
  ok &= require(pass_report.max_residual == 0.0, detail,
                "origin tensor evaluation has nonzero residual");

  std::map<TensorFunctional<GQ>::Key, GQ> values;
  for (const MultiIndex& alpha : multi_indices_up_to(1, 24))
    for (const MultiIndex& beta : multi_indices_up_to(1, 24 - alpha.degree()))
      values.insert({{alpha, beta}, GQ(Rational(0))});
  values[{MultiIndex::zero(1), MultiIndex::zero(1)}] = GQ(Rational(1));
  values[{MultiIndex({1}), MultiIndex({1})}] = GQ(Rational(1, 10));
  TensorFunctional<GQ> perturbed(1, 24, std::move(values), "perturbed");

  auto fail_report =
      check_tensor_criterion(perturbed, hardy2, default_tensor_sample_points<GQ>(1), 1e-9);
  ok &= require(fail_report.verdict == Verdict::Fail, detail,
                "perturbed tensor functional did not fail the criterion");

  auto brute = brute_force_multiplicative(perturbed.as_functional_2d(), 5);
  auto sweep = tensor_identity_sweep(perturbed, hardy2.left, hardy2.right, 5);
  ok &= require(!brute.multiplicative && brute.witness_degree.has_value(), detail,
                "tensor brute force did not fail");
  ok &= require(!sweep.all_equal && sweep.first_failure_degree.has_value(), detail,
                "tensor identity sweep did not fail");
  ok &= require(brute.witness_degree == sweep.first_failure_degree, detail,
                "criterion and brute-force witness degrees differ");
  return ok;
}

// --- criterion 8: lemma 2.1 stability ---------------------------------------------

bool criterion_membership_stability(std::string& detail) {
  bool ok = true;
  std::vector<std::vector<Complex>> points{{Complex(0.5, 0)},
                                           {Complex(-0.3, 0.25)},
                                           {Complex(0.25, 0.25)}};
  for (const Kernel& k : {Kernel::szego(24), Kernel::dirichlet(24)}) {
    for (int p : {1, 2, 3}) {
      for (const auto& w : points) {
        double at_16 = inverse_kernel_power_norm_sq(k, p, w, 1, 16);
        double at_24 = inverse_kernel_power_norm_sq(k, p, w, 1, 24);
        double change = std::abs(at_24 - at_16);
        ok &= require(change < 1e-8, detail,
                      "norm change " + std::to_string(change) + " for " + k.label() +
                          ", p = " + std::to_string(p));
      }
    }
  }
  return ok;
}

// --- criterion 9: norm lower-bound monotonicity -------------------------------------

bool criterion_norm_monotonicity(std::string& detail) {
  bool ok = true;
  std::vector<Functional<GQ>> fixtures{
      point_evaluation(Kernel::szego(24), std::vector<GQ>{GQ(Rational(0))}),
      point_evaluation(Kernel::szego(24), std::vector<GQ>{GQ(Rational(2, 5))}),
      point_evaluation(Kernel::szego(24), std::vector<GQ>{GQ(Rational(1, 4), Rational(1, 4))}),
      counterexample_functional<GQ>(24),
      boundary_limit_ones<GQ>(1, 24),
  };
  std::vector<std::function<Kernel(int)>> kernels{
      [](int n) { return Kernel::szego(n); },
      [](int n) { return Kernel::dirichlet(n); },
      [](int n) { return kernel_power(Kernel::szego(n), 2); },
  };
  for (const auto& make_kernel : kernels) {
    for (const auto& f : fixtures) {
      Rational previous(0);
      for (int n = 4; n <= 24; n += 4) {
        Rational current = functional_norm_sq_truncated(f, make_kernel(n));
        ok &= require(current >= previous, detail, "norm decreased between truncations");
        previous = current;
      }
    }
  }

  // point-evaluation norms against the diagonal kernel evaluation
  for (const Kernel& k : {Kernel::szego(24), Kernel::dirichlet(24)}) {
    for (Complex v : {Complex(0.4, 0), Complex(0.2, -0.3)}) {
      auto f = point_evaluation(k, std::vector<Complex>{v});
      double norm_sq = functional_norm_sq_truncated(f, k);
      auto eval = kernel_eval(k, {v}, {v});
      ok &= require(std::abs(norm_sq - eval.value.real()) <= eval.tail_estimate + 1e-12,
                    detail, "norm^2 and k(v, v) differ beyond the tail estimate");
    }
  }
  return ok;
}

// --- criterion 10: byte-identical reports --------------------------------------------

std::string cli_binary_path;
std::string demo_config_path;

bool criterion_determinism(std::string& detail) {
  if (cli_binary_path.empty() || demo_config_path.empty()) {
    detail = "usage: acceptance <rkhsmult binary> <demo config>";
    return false;
  }
  auto out1 = std::filesystem::temp_directory_path() / "rkhsmult_acceptance_run1.json";
  auto out2 = std::filesystem::temp_directory_path() / "rkhsmult_acceptance_run2.json";
  std::string base = cli_binary_path + " report --config " + demo_config_path;
  int rc1 = std::system((base + " --out " + out1.string() + " 2>/dev/null").c_str());
  int rc2 = std::system((base + " --out " + out2.string() + " 2>/dev/null").c_str());
  (void)rc1;
  (void)rc2;
  std::ifstream in1(out1, std::ios::binary), in2(out2, std::ios::binary);
  if (!in1 || !in2) {
    detail = "tool did not produce report files";
    return false;
  }
  std::ostringstream s1, s2;
  s1 << in1.rdbuf();
  s2 << in2.rdbuf();
  std::filesystem::remove(out1);
  std::filesystem::remove(out2);
  if (s1.str().empty() || s1.str() != s2.str()) {
    detail = "reports differ between runs";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_binary_path = argv[1];
  if (argc > 2) demo_config_path = argv[2];

  std::vector<Criterion> criteria{
      {1, "CNP transform exactness at N = 50", criterion_cnp_exactness},
      {2, "Dirichlet CNP evidence vs recurrence oracle", criterion_dirichlet_evidence},
      {3, "counterexample reproduction", criterion_counterexample},
      {4, "identity/brute-force equivalence, 100 random functionals",
       criterion_equivalence_desk_scale},
      {5, "dual-route consistency within 1e-9", criterion_dual_route},
      {6, "schur/power coherence within 1e-12", criterion_schur_power_coherence},
      {7, "tensor criterion on the polydisc Hardy space", criterion_tensor_polydisc},
      {8, "inverse-kernel norm stability N = 16 vs 24", criterion_membership_stability},
      {9, "norm lower-bound monotonicity", criterion_norm_monotonicity},
      {10, "byte-identical reports in exact mode", criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    bool passed = false;
    auto start = Clock::now();
    try {
      passed = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed = ms_since(start);
    std::cout << (passed ? "PASS" : "FAIL") << " criterion " << criterion.number << ": "
              << criterion.name << " (" << static_cast<long>(elapsed) << " ms)";
    if (!passed) {
      std::cout << " -- " << detail;
      ++failures;
    }
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
            << (criteria.size() - static_cast<std::size_t>(failures)) << "/"
            << criteria.size() << ")\n";
  return failures == 0 ? 0 : 1;
}
