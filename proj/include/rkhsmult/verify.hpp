#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rkhsmult/functional.hpp"

namespace rkhsmult {

/// Three-valued criterion outcome. Pass requires both a residual within
/// tolerance and clean hypothesis flags; Fail requires a residual that
/// exceeds tolerance plus the truncation-tail band (conclusive);
/// anything in between is Inconclusive.
enum class Verdict { Pass, Fail, Inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// Norm-1 and Lambda(1)=1 hypothesis record. The truncated norm is a
/// lower bound, so norm_bound_not_refuted = false is a definitive
/// violation while true is only "not refuted".
struct HypothesisFlags {
  bool lambda_one_ok = true;
  bool norm_bound_not_refuted = true;
  double norm_sq_truncated = 0.0;
  std::optional<Rational> norm_sq_exact;

  bool clean() const { return lambda_one_ok && norm_bound_not_refuted; }
};

struct ResidualSample {
  double residual = 0.0;
  double tail_band = 0.0;  // heuristic truncation estimate, labeled as such
  std::optional<Rational> residual_sq_exact;
  std::optional<Rational> residual_exact;  // only when |.| is itself rational
};

template <class S>
struct CriterionReport {
  std::string criterion_kind;  // "power" | "schur" | "tensor"
  std::string mode;
  int p = 1;
  double tolerance = 0.0;
  std::vector<std::vector<S>> sample_points;
  std::vector<std::pair<std::vector<S>, std::vector<S>>> sample_point_pairs;
  std::vector<ResidualSample> residuals;
  double max_residual = 0.0;
  HypothesisFlags hypothesis;
  Verdict verdict = Verdict::Inconclusive;
};

// --- shared helpers ---------------------------------------------------------

inline std::vector<double> sqrt_abs_coeffs(const RationalSeries& s) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(s.truncation_degree()) + 1);
  for (int n = 0; n <= s.truncation_degree(); ++n)
    out.push_back(std::sqrt(std::abs(to_double(s[n]))));
  return out;
}

/// Estimate of sum_{n>N} sqrt(|c_n|) rho^n, the degree-n Cauchy-Schwarz
/// envelope of a truncated functional application. +inf when the
/// empirical ratio cannot certify convergence.
inline double series_tail_sqrt_estimate(const RationalSeries& s, double rho) {
  return geometric_tail_estimate_soft(sqrt_abs_coeffs(s), rho);
}

template <class S>
double point_radius(const std::vector<S>& w) {
  return std::sqrt(scalar_traits<S>::real_to_double(point_norm_sq(w)));
}

template <class S>
ResidualSample make_residual(const S& deviation, double band) {
  ResidualSample out;
  out.residual = scalar_traits<S>::abs_approx(deviation);
  out.tail_band = band;
  if constexpr (scalar_traits<S>::is_exact) {
    out.residual_sq_exact = deviation.abs_sq();
    out.residual_exact = exact_sqrt(*out.residual_sq_exact);
  }
  return out;
}

template <class S>
bool scalar_close(const S& a, const S& b, double tol) {
  if constexpr (scalar_traits<S>::is_exact)
    return a == b;
  else
    return std::abs(a - b) <= tol;
}

template <class S>
HypothesisFlags hypothesis_flags(const Functional<S>& f, const Kernel& norm_kernel,
                                 double tol) {
  HypothesisFlags flags;
  auto norm_sq = functional_norm_sq_truncated(f, norm_kernel);
  flags.norm_sq_truncated = scalar_traits<S>::real_to_double(norm_sq);
  if constexpr (scalar_traits<S>::is_exact) {
    flags.norm_sq_exact = norm_sq;
    flags.lambda_one_ok = f.value_at_zero() == scalar_traits<S>::one();
    Rational bound = (Rational(1) + Rational(tol)) * (Rational(1) + Rational(tol));
    flags.norm_bound_not_refuted = norm_sq <= bound;
  } else {
    flags.lambda_one_ok = std::abs(f.value_at_zero() - scalar_traits<S>::one()) <= tol;
    flags.norm_bound_not_refuted = norm_sq <= (1.0 + tol) * (1.0 + tol);
  }
  return flags;
}

template <class S>
HypothesisFlags hypothesis_flags_tensor(const TensorFunctional<S>& f, const TensorKernel& k,
                                        double tol) {
  HypothesisFlags flags;
  auto norm_sq = tensor_norm_sq_truncated(f, k);
  flags.norm_sq_truncated = scalar_traits<S>::real_to_double(norm_sq);
  if constexpr (scalar_traits<S>::is_exact) {
    flags.norm_sq_exact = norm_sq;
    flags.lambda_one_ok = f.value_at_zero() == scalar_traits<S>::one();
    Rational bound = (Rational(1) + Rational(tol)) * (Rational(1) + Rational(tol));
    flags.norm_bound_not_refuted = norm_sq <= bound;
  } else {
    flags.lambda_one_ok = std::abs(f.value_at_zero() - scalar_traits<S>::one()) <= tol;
    flags.norm_bound_not_refuted = norm_sq <= (1.0 + tol) * (1.0 + tol);
  }
  return flags;
}

inline Verdict classify_criterion(const std::vector<ResidualSample>& residuals, double tol,
                                  const HypothesisFlags& flags) {
  double max_residual = 0.0;
  bool conclusive_fail = false;
  for (const ResidualSample& r : residuals) {
    max_residual = std::max(max_residual, r.residual);
    if (r.residual > tol + r.tail_band) conclusive_fail = true;
  }
  if (max_residual <= tol && flags.clean()) return Verdict::Pass;
  if (conclusive_fail) return Verdict::Fail;
  return Verdict::Inconclusive;
}

// --- criterion checks --------------------------------------------------------

/// Power criterion: |[Lambda(1/k_w)]^p * Lambda(k_w^p) - 1| per sample.
template <class S>
CriterionReport<S> check_power_criterion(const Functional<S>& f, const Kernel& k, int p,
                                         const std::vector<std::vector<S>>& samples,
                                         double tol) {
  if (p < 1) fail(ErrorKind::Validation, "power criterion requires p >= 1");
  CnpData cnp = cnp_transform(k);
  if (!cnp.is_cnp_up_to_truncation)
    fail(ErrorKind::NotCnp, "kernel '" + k.label() + "' is not CNP up to truncation");

  Kernel kp = kernel_power(k, p);
  CriterionReport<S> report;
  report.criterion_kind = "power";
  report.mode = scalar_traits<S>::mode_name();
  report.p = p;
  report.tolerance = tol;
  report.sample_points = samples;
  report.hypothesis = hypothesis_flags(f, kp, tol);

  double norm_f = std::sqrt(std::max(report.hypothesis.norm_sq_truncated, 0.0));
  for (const std::vector<S>& w : samples) {
    S inv = apply_to_inverse_kernel(f, k, w);
    S pow_val = apply_to_kernel_function(f, kp, w);
    S deviation = scalar_traits<S>::pow(inv, static_cast<unsigned>(p)) * pow_val -
                  scalar_traits<S>::one();

    double rho = point_radius(w);
    double e_inv = norm_f * series_tail_sqrt_estimate(cnp.b_series, rho);
    double e_pow = norm_f * series_tail_sqrt_estimate(kp.a_series(), rho);
    double abs_inv = scalar_traits<S>::abs_approx(inv);
    double abs_pow = scalar_traits<S>::abs_approx(pow_val);
    double band = std::pow(abs_inv + e_inv, p) * (abs_pow + e_pow) -
                  std::pow(abs_inv, p) * abs_pow;

    report.residuals.push_back(make_residual(deviation, band));
    report.max_residual = std::max(report.max_residual, report.residuals.back().residual);
  }
  report.verdict = classify_criterion(report.residuals, tol, report.hypothesis);
  return report;
}

/// Schur criterion: |Lambda(1/k1_w) * Lambda(1/k2_w) * Lambda(k_w) - 1|
/// with k the Schur product.
template <class S>
CriterionReport<S> check_schur_criterion(const Functional<S>& f, const Kernel& k1,
                                         const Kernel& k2,
                                         const std::vector<std::vector<S>>& samples,
                                         double tol) {
  CnpData cnp1 = cnp_transform(k1);
  CnpData cnp2 = cnp_transform(k2);
  if (!cnp1.is_cnp_up_to_truncation || !cnp2.is_cnp_up_to_truncation)
    fail(ErrorKind::NotCnp, "schur criterion requires both factors CNP up to truncation");
  Kernel k = schur_product(k1, k2);

  CriterionReport<S> report;
  report.criterion_kind = "schur";
  report.mode = scalar_traits<S>::mode_name();
  report.tolerance = tol;
  report.sample_points = samples;
  report.hypothesis = hypothesis_flags(f, k, tol);

  double norm_f = std::sqrt(std::max(report.hypothesis.norm_sq_truncated, 0.0));
  for (const std::vector<S>& w : samples) {
    S a = apply_to_inverse_kernel(f, k1, w);
    S b = apply_to_inverse_kernel(f, k2, w);
    S c = apply_to_kernel_function(f, k, w);
    S deviation = a * b * c - scalar_traits<S>::one();

    double rho = point_radius(w);
    double ea = norm_f * series_tail_sqrt_estimate(cnp1.b_series, rho);
    double eb = norm_f * series_tail_sqrt_estimate(cnp2.b_series, rho);
    double ec = norm_f * series_tail_sqrt_estimate(k.a_series(), rho);
    double aa = scalar_traits<S>::abs_approx(a);
    double ab = scalar_traits<S>::abs_approx(b);
    double ac = scalar_traits<S>::abs_approx(c);
    double band = (aa + ea) * (ab + eb) * (ac + ec) - aa * ab * ac;

    report.residuals.push_back(make_residual(deviation, band));
    report.max_residual = std::max(report.max_residual, report.residuals.back().residual);
  }
  report.verdict = classify_criterion(report.residuals, tol, report.hypothesis);
  return report;
}

/// Tensor criterion at sample pairs (y, t):
/// |Lambda(1/k1_y) * Lambda(1/k2_t) * Lambda(k1_y (x) k2_t) - 1|.
template <class S>
CriterionReport<S> check_tensor_criterion(
    const TensorFunctional<S>& f, const TensorKernel& k,
    const std::vector<std::pair<std::vector<S>, std::vector<S>>>& samples, double tol) {
  CnpData cnp1 = cnp_transform(k.left);
  CnpData cnp2 = cnp_transform(k.right);
  if (!cnp1.is_cnp_up_to_truncation || !cnp2.is_cnp_up_to_truncation)
    fail(ErrorKind::NotCnp, "tensor criterion requires both factors CNP up to truncation");

  CriterionReport<S> report;
  report.criterion_kind = "tensor";
  report.mode = scalar_traits<S>::mode_name();
  report.tolerance = tol;
  report.sample_point_pairs = samples;
  report.hypothesis = hypothesis_flags_tensor(f, k, tol);

  RationalSeries product_series = series_mul(k.left.a_series(), k.right.a_series());
  double norm_f = std::sqrt(std::max(report.hypothesis.norm_sq_truncated, 0.0));
  for (const auto& [y, t] : samples) {
    S a = apply_tensor_to_left_inverse(f, k, y);
    S b = apply_tensor_to_right_inverse(f, k, t);
    S c = apply_tensor_to_kernel_function(f, k, y, t);
    S deviation = a * b * c - scalar_traits<S>::one();

    double rho_y = point_radius(y);
    double rho_t = point_radius(t);
    double ea = norm_f * series_tail_sqrt_estimate(cnp1.b_series, rho_y);
    double eb = norm_f * series_tail_sqrt_estimate(cnp2.b_series, rho_t);
    double ec = norm_f * series_tail_sqrt_estimate(product_series, std::max(rho_y, rho_t));
    double aa = scalar_traits<S>::abs_approx(a);
    double ab = scalar_traits<S>::abs_approx(b);
    double ac = scalar_traits<S>::abs_approx(c);
    double band = (aa + ea) * (ab + eb) * (ac + ec) - aa * ab * ac;

    report.residuals.push_back(make_residual(deviation, band));
    report.max_residual = std::max(report.max_residual, report.residuals.back().residual);
  }
  report.verdict = classify_criterion(report.residuals, tol, report.hypothesis);
  return report;
}

// --- brute-force multiplicativity oracle -------------------------------------

template <class S>
struct MultiplicativityReport {
  std::string mode;
  int max_degree = 0;
  bool multiplicative = true;
  std::optional<std::pair<MultiIndex, MultiIndex>> witness;  // first failing split
  std::optional<int> witness_degree;
  bool power_rule_holds = true;  // values[alpha] = prod values[e_i]^{alpha_i}
  std::optional<MultiIndex> power_rule_witness;
};

/// Checks Lambda(z^{alpha+beta}) = Lambda(z^alpha) Lambda(z^beta) for all
/// |alpha+beta| <= max_degree, scanning degrees upward so the witness has
/// minimal degree, plus the equivalent monomial power rule. Exact in
/// rational mode, tolerance-based in float mode.
template <class S>
MultiplicativityReport<S> brute_force_multiplicative(const Functional<S>& f, int max_degree,
                                                     double float_tol = 1e-12) {
  if (2 * max_degree > f.degree())
    fail(ErrorKind::DegreeOutOfRange,
         "brute-force check needs functional degree >= 2 * max_degree");
  MultiplicativityReport<S> report;
  report.mode = scalar_traits<S>::mode_name();
  report.max_degree = max_degree;

  auto indices = multi_indices_up_to(f.dimension(), max_degree);
  for (int deg = 0; deg <= max_degree && !report.witness; ++deg) {
    for (const MultiIndex& gamma : indices) {
      if (gamma.degree() != deg) continue;
      for (const MultiIndex& alpha : indices) {
        if (alpha > gamma) break;  // lex-sorted; subindices of gamma are <= gamma
        auto beta = gamma.minus(alpha);
        if (!beta || alpha > *beta) continue;  // each unordered split once
        if (!scalar_close(f.value(gamma), f.value(alpha) * f.value(*beta), float_tol)) {
          report.multiplicative = false;
          report.witness = std::make_pair(alpha, *beta);
          report.witness_degree = deg;
          break;
        }
      }
      if (report.witness) break;
    }
  }

  for (const MultiIndex& alpha : indices) {
    S product = scalar_traits<S>::one();
    for (int i = 0; i < f.dimension(); ++i)
      product = product * scalar_traits<S>::pow(f.value(MultiIndex::unit(f.dimension(), i)),
                                                static_cast<unsigned>(alpha[i]));
    if (!scalar_close(f.value(alpha), product, float_tol)) {
      report.power_rule_holds = false;
      report.power_rule_witness = alpha;
      break;
    }
  }
  return report;
}

// --- exact coefficient identities ---------------------------------------------

struct IdentityReport {
  std::string variant;  // "power" | "schur"
  int p = 1;
  MultiIndex alpha = MultiIndex::zero(1);
  GaussianRational lhs;
  GaussianRational rhs;
  bool equal = false;
};

struct TensorIdentityReport {
  MultiIndex alpha = MultiIndex::zero(1);
  MultiIndex beta = MultiIndex::zero(1);
  GaussianRational lhs;
  GaussianRational rhs;
  bool equal = false;
};

namespace detail {

/// sum over r = 1..|delta| of weight(r) * sum over compositions
/// gamma_1+...+gamma_r = delta of prod b_{gamma_i} * (value products when
/// a functional is supplied, 1 otherwise). `value_of` maps a part to
/// Lambda of its monomial.
inline GaussianRational composition_sum(
    const CnpData& cnp, const MultiIndex& delta,
    const std::function<Rational(int)>& weight,
    const std::function<GaussianRational(const MultiIndex&)>* value_of) {
  GaussianRational total(Rational(0));
  for (int r = 1; r <= delta.degree(); ++r) {
    Rational w = weight(r);
    if (w == 0) continue;
    GaussianRational r_sum(Rational(0));
    for (const Composition& comp : compositions(delta, r)) {
      Rational b_product(1);
      GaussianRational value_product(Rational(1));
      for (const MultiIndex& part : comp.parts) {
        b_product *= b_alpha(cnp, part);
        if (value_of) value_product = value_product * (*value_of)(part);
      }
      r_sum = r_sum + b_product * value_product;
    }
    total = total + w * r_sum;
  }
  return total;
}

inline void require_cnp(const CnpData& cnp, const std::string& label) {
  if (!cnp.is_cnp_up_to_truncation)
    fail(ErrorKind::NotCnp, "kernel '" + label + "' is not CNP up to truncation");
}

}  // namespace detail

/// The exact coefficient identity behind the power criterion at one
/// multi-index: sum_r binom(r+p-1, p-1) sum_{compositions} prod b *
/// Lambda-products on the left, the same composition weights against
/// Lambda(z^alpha) on the right. Exact Gaussian-rational comparison.
inline IdentityReport coefficient_identity_check(const Functional<GaussianRational>& f,
                                                 const Kernel& k, int p,
                                                 const MultiIndex& alpha) {
  if (p < 1) fail(ErrorKind::Validation, "identity check requires p >= 1");
  if (alpha.is_zero()) fail(ErrorKind::ZeroIndex, "identity is stated for alpha != 0");
  if (alpha.degree() > f.degree() || alpha.degree() > k.truncation_degree())
    fail(ErrorKind::DegreeOutOfRange, "identity degree beyond truncation");
  CnpData cnp = cnp_transform(k);
  detail::require_cnp(cnp, k.label());

  auto weight = [p](int r) { return Rational(binomial_int(r + p - 1, p - 1)); };
  std::function<GaussianRational(const MultiIndex&)> value_of =
      [&f](const MultiIndex& part) { return f.value(part); };

  IdentityReport report;
  report.variant = "power";
  report.p = p;
  report.alpha = alpha;
  report.lhs = detail::composition_sum(cnp, alpha, weight, &value_of);
  report.rhs = detail::composition_sum(cnp, alpha, weight, nullptr) * f.value(alpha);
  report.equal = report.lhs == report.rhs;
  return report;
}

/// Schur-product analogue: splittings delta_1 + delta_2 = alpha into
/// nonzero halves, composition sums of b^1 against the first half and b^2
/// against the second.
inline IdentityReport coefficient_identity_check_schur(const Functional<GaussianRational>& f,
                                                       const Kernel& k1, const Kernel& k2,
                                                       const MultiIndex& alpha) {
  if (alpha.is_zero()) fail(ErrorKind::ZeroIndex, "identity is stated for alpha != 0");
  CnpData cnp1 = cnp_transform(k1);
  CnpData cnp2 = cnp_transform(k2);
  detail::require_cnp(cnp1, k1.label());
  detail::require_cnp(cnp2, k2.label());
  if (k1.dimension() != k2.dimension() || f.dimension() != k1.dimension())
    fail(ErrorKind::DimensionMismatch, "schur identity needs matching dimensions");

  auto unit_weight = [](int) { return Rational(1); };
  std::function<GaussianRational(const MultiIndex&)> value_of =
      [&f](const MultiIndex& part) { return f.value(part); };

  GaussianRational lhs(Rational(0));
  Rational rhs_weight(0);
  for (const MultiIndex& delta1 : multi_indices_up_to(alpha.dimension(), alpha.degree())) {
    if (delta1.is_zero()) continue;
    auto delta2 = alpha.minus(delta1);
    if (!delta2 || delta2->is_zero()) continue;
    lhs = lhs + detail::composition_sum(cnp1, delta1, unit_weight, &value_of) *
                    detail::composition_sum(cnp2, *delta2, unit_weight, &value_of);
    GaussianRational d1 = detail::composition_sum(cnp1, delta1, unit_weight, nullptr);
    GaussianRational d2 = detail::composition_sum(cnp2, *delta2, unit_weight, nullptr);
    rhs_weight += d1.re * d2.re;  // b-products are real rationals
  }

  IdentityReport report;
  report.variant = "schur";
  report.alpha = alpha;
  report.lhs = lhs;
  report.rhs = rhs_weight * f.value(alpha);
  report.equal = report.lhs == report.rhs;
  return report;
}

/// Tensor analogue at a grid index (alpha, beta). A zero half reduces to
/// the single-kernel identity on the other group of variables, matching
/// the constant term of the untouched geometric factor.
inline TensorIdentityReport coefficient_identity_check_tensor(
    const TensorFunctional<GaussianRational>& f, const Kernel& k1, const Kernel& k2,
    const MultiIndex& alpha, const MultiIndex& beta) {
  if (alpha.is_zero() && beta.is_zero())
    fail(ErrorKind::ZeroIndex, "tensor identity is stated for (alpha, beta) != 0");
  CnpData cnp1 = cnp_transform(k1);
  CnpData cnp2 = cnp_transform(k2);
  detail::require_cnp(cnp1, k1.label());
  detail::require_cnp(cnp2, k2.label());

  int d = f.dimension();
  auto unit_weight = [](int) { return Rational(1); };
  std::function<GaussianRational(const MultiIndex&)> left_value =
      [&f, d](const MultiIndex& part) { return f.value(part, MultiIndex::zero(d)); };
  std::function<GaussianRational(const MultiIndex&)> right_value =
      [&f, d](const MultiIndex& part) { return f.value(MultiIndex::zero(d), part); };

  GaussianRational left_c(Rational(1)), right_c(Rational(1));
  GaussianRational left_d(Rational(1)), right_d(Rational(1));
  if (!alpha.is_zero()) {
    left_c = detail::composition_sum(cnp1, alpha, unit_weight, &left_value);
    left_d = detail::composition_sum(cnp1, alpha, unit_weight, nullptr);
  }
  if (!beta.is_zero()) {
    right_c = detail::composition_sum(cnp2, beta, unit_weight, &right_value);
    right_d = detail::composition_sum(cnp2, beta, unit_weight, nullptr);
  }

  TensorIdentityReport report;
  report.alpha = alpha;
  report.beta = beta;
  report.lhs = left_c * right_c;
  report.rhs = left_d * right_d * f.value(alpha, beta);
  report.equal = report.lhs == report.rhs;
  return report;
}

struct IdentitySweepReport {
  std::string variant;
  int p = 1;
  int max_degree = 0;
  int checked = 0;
  bool all_equal = true;
  std::optional<MultiIndex> first_failure;
  std::optional<int> first_failure_degree;
};

/// Runs the power identity at every 1 <= |alpha| <= max_degree, degrees
/// ascending, and records the first failure.
inline IdentitySweepReport identity_sweep(const Functional<GaussianRational>& f,
                                          const Kernel& k, int p, int max_degree) {
  IdentitySweepReport sweep;
  sweep.variant = "power";
  sweep.p = p;
  sweep.max_degree = max_degree;
  auto indices = multi_indices_up_to(f.dimension(), max_degree);
  for (int deg = 1; deg <= max_degree; ++deg) {
    for (const MultiIndex& alpha : indices) {
      if (alpha.degree() != deg) continue;
      ++sweep.checked;
      if (!coefficient_identity_check(f, k, p, alpha).equal) {
        sweep.all_equal = false;
        sweep.first_failure = alpha;
        sweep.first_failure_degree = deg;
        return sweep;
      }
    }
  }
  return sweep;
}

struct TensorIdentitySweepReport {
  int max_degree = 0;
  int checked = 0;
  bool all_equal = true;
  std::optional<std::pair<MultiIndex, MultiIndex>> first_failure;
  std::optional<int> first_failure_degree;  // |alpha| + |beta|
};

inline TensorIdentitySweepReport tensor_identity_sweep(
    const TensorFunctional<GaussianRational>& f, const Kernel& k1, const Kernel& k2,
    int max_degree) {
  TensorIdentitySweepReport sweep;
  sweep.max_degree = max_degree;
  int d = f.dimension();
  auto indices = multi_indices_up_to(d, max_degree);
  for (int deg = 1; deg <= max_degree; ++deg) {
    for (const MultiIndex& alpha : indices) {
      if (alpha.degree() > deg) continue;
      for (const MultiIndex& beta : indices) {
        if (alpha.degree() + beta.degree() != deg) continue;
        ++sweep.checked;
        if (!coefficient_identity_check_tensor(f, k1, k2, alpha, beta).equal) {
          sweep.all_equal = false;
          sweep.first_failure = std::make_pair(alpha, beta);
          sweep.first_failure_degree = deg;
          return sweep;
        }
      }
    }
  }
  return sweep;
}

// --- combined equivalence suite ------------------------------------------------

struct EquivalenceSuiteReport {
  MultiplicativityReport<GaussianRational> brute;
  IdentitySweepReport identity;
  CriterionReport<GaussianRational> criterion;
  bool legs_agree = true;
  Verdict combined_verdict = Verdict::Inconclusive;
  std::vector<std::string> caveats;
};

/// Runs the multiplicativity oracle, the identity sweep and the sampled
/// power criterion and cross-checks their verdicts. The two exact legs
/// are authoritative; sampled residuals are diagnostics and can only
/// contradict them by failing where the exact legs pass.
inline EquivalenceSuiteReport equivalence_suite(
    const Functional<GaussianRational>& f, const Kernel& k, int p, int max_degree,
    const std::vector<std::vector<GaussianRational>>& samples, double tol) {
  EquivalenceSuiteReport suite;
  suite.brute = brute_force_multiplicative(f, max_degree);
  suite.identity = identity_sweep(f, k, p, max_degree);
  suite.criterion = check_power_criterion(f, k, p, samples, tol);

  bool exact_pass = suite.brute.multiplicative;
  if (suite.brute.multiplicative != suite.identity.all_equal) {
    suite.legs_agree = false;
    suite.caveats.push_back("brute-force and identity legs disagree");
  }
  if (suite.criterion.verdict == Verdict::Fail && exact_pass && suite.identity.all_equal) {
    suite.legs_agree = false;
    suite.caveats.push_back("sampled criterion fails though exact legs pass");
  }
  if (suite.criterion.verdict != Verdict::Fail && !exact_pass)
    suite.caveats.push_back("samples did not witness the exact-leg failure");
  if (!suite.criterion.hypothesis.norm_bound_not_refuted)
    suite.caveats.push_back(
        "truncated norm exceeds 1: theorem equivalence not applicable, residuals reported as-is");
  if (!suite.criterion.hypothesis.lambda_one_ok)
    suite.caveats.push_back("Lambda(1) != 1: hypothesis violated");

  if (!suite.legs_agree)
    suite.combined_verdict = Verdict::Inconclusive;
  else if (!exact_pass)
    suite.combined_verdict = Verdict::Fail;
  else if (suite.criterion.verdict == Verdict::Pass)
    suite.combined_verdict = Verdict::Pass;
  else
    suite.combined_verdict =
        suite.criterion.hypothesis.clean() ? Verdict::Inconclusive : Verdict::Pass;
  return suite;
}

// --- sample grids ----------------------------------------------------------------

/// The documented default scalar grid: fixed points of modulus <= 0.4,
/// all with exactly representable rational parts.
std::vector<std::pair<Rational, Rational>> default_base_scalars();

/// Base scalar t mapped into B_d as w = t * (1, 1/2, 1/4, ...), keeping
/// |w| <= 0.5 for every default base point.
template <class S>
std::vector<S> spread_into_ball(const S& t, int dimension) {
  std::vector<S> w;
  w.reserve(static_cast<std::size_t>(dimension));
  Rational scale(1);
  for (int j = 0; j < dimension; ++j) {
    w.push_back(scalar_traits<S>::from_rational(scale) * t);
    scale /= 2;
  }
  return w;
}

template <class S>
std::vector<std::vector<S>> default_sample_points(int dimension) {
  std::vector<std::vector<S>> out;
  for (const auto& [re, im] : default_base_scalars())
    out.push_back(spread_into_ball(scalar_traits<S>::from_parts(re, im), dimension));
  return out;
}

template <class S>
std::vector<std::pair<std::vector<S>, std::vector<S>>> default_tensor_sample_points(
    int dimension) {
  auto base = default_sample_points<S>(dimension);
  std::vector<std::pair<std::vector<S>, std::vector<S>>> out;
  for (std::size_t i = 0; i < base.size(); ++i)
    out.emplace_back(base[i], base[(i + 3) % base.size()]);
  return out;
}

/// 100-point low-radius sweep (radii 0.05..0.25, 20 angles); float mode
/// only, the angles are not rational.
std::vector<std::complex<double>> dense_base_scalars();

}  // namespace rkhsmult
