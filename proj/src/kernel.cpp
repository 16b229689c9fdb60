#include "rkhsmult/kernel.hpp"

#include <cmath>
#include <limits>

namespace rkhsmult {

Kernel::Kernel(int dimension, RationalSeries a_series, std::string label)
    : dimension_(dimension), a_(std::move(a_series)), label_(std::move(label)) {
  if (dimension_ < 1) fail(ErrorKind::Validation, "kernel dimension must be >= 1");
  if (a_[0] != 1)
    fail(ErrorKind::Validation, "kernel series must have a_0 = 1, got " +
                                    rational_to_string(a_[0]) + " in '" + label_ + "'");
  for (int n = 1; n <= a_.truncation_degree(); ++n)
    if (a_[n] <= 0)
      fail(ErrorKind::Validation, "kernel series must have a_n > 0; a_" +
                                      std::to_string(n) + " = " +
                                      rational_to_string(a_[n]) + " in '" + label_ + "'");
}

Kernel Kernel::szego(int truncation_degree) {
  return Kernel(1, RationalSeries::from_fn(truncation_degree, [](int) { return Rational(1); }),
                "szego");
}

Kernel Kernel::drury_arveson(int dimension, int truncation_degree) {
  return Kernel(dimension,
                RationalSeries::from_fn(truncation_degree, [](int) { return Rational(1); }),
                "drury_arveson(" + std::to_string(dimension) + ")");
}

Kernel Kernel::dirichlet(int truncation_degree) {
  return Kernel(1,
                RationalSeries::from_fn(truncation_degree,
                                        [](int n) { return Rational(1, n + 1); }),
                "dirichlet");
}

Kernel Kernel::from_coeffs(std::vector<Rational> coeffs, std::string label) {
  return Kernel(1, RationalSeries(std::move(coeffs)), std::move(label));
}

CnpData cnp_transform(const Kernel& k) {
  RationalSeries b =
      series_sub(RationalSeries::unit(k.truncation_degree()), series_reciprocal(k.a_series()));
  CnpData out{b, true, std::nullopt, false};
  for (int n = 1; n <= b.truncation_degree(); ++n) {
    if (b[n] < 0) {
      out.is_cnp_up_to_truncation = false;
      out.first_negative_index = n;
      break;
    }
  }
  out.is_normalized = b.truncation_degree() >= 1 && b[1] == 1;
  return out;
}

Rational a_alpha(const Kernel& k, const MultiIndex& alpha) {
  if (alpha.dimension() != k.dimension())
    fail(ErrorKind::DimensionMismatch, "multi-index dimension does not match kernel");
  if (alpha.degree() > k.truncation_degree())
    fail(ErrorKind::DegreeOutOfRange, "|alpha| = " + std::to_string(alpha.degree()) +
                                          " beyond truncation " +
                                          std::to_string(k.truncation_degree()));
  return k.a_n(alpha.degree()) * Rational(multinomial(alpha));
}

Rational b_alpha(const CnpData& cnp, const MultiIndex& alpha) {
  if (alpha.is_zero()) fail(ErrorKind::ZeroIndex, "b_alpha is undefined at alpha = 0");
  if (alpha.degree() > cnp.b_series.truncation_degree())
    fail(ErrorKind::DegreeOutOfRange, "|alpha| = " + std::to_string(alpha.degree()) +
                                          " beyond truncation " +
                                          std::to_string(cnp.b_series.truncation_degree()));
  return cnp.b_series[alpha.degree()] * Rational(multinomial(alpha));
}

Rational b_alpha(const Kernel& k, const MultiIndex& alpha) {
  if (alpha.dimension() != k.dimension())
    fail(ErrorKind::DimensionMismatch, "multi-index dimension does not match kernel");
  return b_alpha(cnp_transform(k), alpha);
}

Kernel kernel_power(const Kernel& k, int p) {
  if (p < 1) fail(ErrorKind::Validation, "kernel power requires p >= 1");
  if (p == 1) return k;
  return Kernel(k.dimension(), series_pow(k.a_series(), p),
                "power(" + k.label() + ", " + std::to_string(p) + ")");
}

Kernel schur_product(const Kernel& k1, const Kernel& k2) {
  if (k1.dimension() != k2.dimension())
    fail(ErrorKind::DimensionMismatch, "schur product needs matching dimensions");
  return Kernel(k1.dimension(), series_mul(k1.a_series(), k2.a_series()),
                "schur(" + k1.label() + ", " + k2.label() + ")");
}

TensorKernel tensor_kernel(Kernel left, Kernel right) {
  if (left.dimension() != right.dimension())
    fail(ErrorKind::DimensionMismatch, "tensor product needs matching dimensions");
  return TensorKernel{std::move(left), std::move(right)};
}

double geometric_tail_estimate(const std::vector<double>& coeffs, double rho) {
  if (coeffs.empty() || rho <= 0.0) return 0.0;
  double ratio = 0.0;
  for (std::size_t n = 0; n + 1 < coeffs.size(); ++n) {
    if (coeffs[n] > 0.0) ratio = std::max(ratio, coeffs[n + 1] / coeffs[n]);
  }
  double last = coeffs.back();
  if (last == 0.0) return 0.0;
  if (rho * ratio >= 1.0)
    fail(ErrorKind::UnreliableTail, "empirical ratio gives rho*R >= 1; tail estimate unreliable");
  auto n = static_cast<double>(coeffs.size());  // last index is N = size-1
  return last * std::pow(rho, n) * ratio / (1.0 - rho * ratio);
}

double geometric_tail_estimate_soft(const std::vector<double>& coeffs, double rho) {
  try {
    return geometric_tail_estimate(coeffs, rho);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnreliableTail)
      return std::numeric_limits<double>::infinity();
    throw;
  }
}

EvalResult kernel_eval(const Kernel& k, const std::vector<std::complex<double>>& z,
                       const std::vector<std::complex<double>>& w, double rho_max) {
  if (static_cast<int>(z.size()) != k.dimension() ||
      static_cast<int>(w.size()) != k.dimension())
    fail(ErrorKind::DimensionMismatch, "evaluation points must match kernel dimension");
  double norm_z = std::sqrt(point_norm_sq(z));
  double norm_w = std::sqrt(point_norm_sq(w));
  if (norm_z >= 1.0 || norm_w >= 1.0)
    fail(ErrorKind::OutsideBall, "kernel_eval arguments must lie in the open ball");
  double rho = norm_z * norm_w;
  if (rho > rho_max)
    fail(ErrorKind::OutsideBall,
         "|z||w| exceeds the configured evaluation radius rho_max");

  std::complex<double> t{0.0, 0.0};
  for (std::size_t i = 0; i < z.size(); ++i) t += z[i] * std::conj(w[i]);

  std::complex<double> sum{0.0, 0.0};
  std::complex<double> t_pow{1.0, 0.0};
  std::vector<double> abs_coeffs;
  abs_coeffs.reserve(static_cast<std::size_t>(k.truncation_degree()) + 1);
  for (int n = 0; n <= k.truncation_degree(); ++n) {
    double a = to_double(k.a_n(n));
    abs_coeffs.push_back(a);
    sum += a * t_pow;
    t_pow *= t;
  }
  double tail = geometric_tail_estimate(abs_coeffs, rho);
  return EvalResult{sum, tail};
}

double inverse_kernel_power_norm_sq(const Kernel& k, int p,
                                    const std::vector<std::complex<double>>& w, int m,
                                    int degree_limit) {
  if (m < 1 || p < 1)
    fail(ErrorKind::Validation, "membership check requires m >= 1 and p >= 1");
  auto inv = inverse_kernel_coeffs(k, w);
  auto f = coeff_map_pow(inv, m, k.truncation_degree());
  Kernel kp = kernel_power(k, p);
  double out = 0.0;
  for (const auto& [alpha, coeff] : f) {
    if (alpha.degree() > degree_limit) continue;
    out += std::norm(coeff) / to_double(a_alpha(kp, alpha));
  }
  return out;
}

MembershipReport lemma21_membership_check(const Kernel& k, int p,
                                          const std::vector<std::complex<double>>& w,
                                          int m, double ratio_threshold) {
  MembershipReport report;
  report.m = m;
  report.p = p;
  report.full_degree = k.truncation_degree();
  report.half_degree = k.truncation_degree() / 2;
  report.norm_sq_half = inverse_kernel_power_norm_sq(k, p, w, m, report.half_degree);
  report.norm_sq_full = inverse_kernel_power_norm_sq(k, p, w, m, report.full_degree);
  report.growth_ratio =
      report.norm_sq_half > 0.0 ? report.norm_sq_full / report.norm_sq_half : 1.0;
  report.divergence_flag = report.growth_ratio > ratio_threshold;
  return report;
}

}  // namespace rkhsmult
