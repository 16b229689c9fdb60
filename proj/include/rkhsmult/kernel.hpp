#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rkhsmult/multi_index.hpp"
#include "rkhsmult/series.hpp"

namespace rkhsmult {

/// Unitarily invariant kernel on the unit ball B_d, determined by the
/// dimension d and the coefficient series of its expansion in powers of
/// the inner product of the arguments. Construction validates a_0 = 1 and
/// a_n > 0 for every retained n; kernels are immutable afterwards.
class Kernel {
public:
  Kernel(int dimension, RationalSeries a_series, std::string label);

  static Kernel szego(int truncation_degree);
  static Kernel drury_arveson(int dimension, int truncation_degree);
  static Kernel dirichlet(int truncation_degree);  // a_n = 1/(n+1)
  static Kernel from_coeffs(std::vector<Rational> coeffs, std::string label);

  int dimension() const { return dimension_; }
  int truncation_degree() const { return a_.truncation_degree(); }
  const RationalSeries& a_series() const { return a_; }
  const std::string& label() const { return label_; }
  Rational a_n(int n) const { return a_[n]; }

private:
  int dimension_;
  RationalSeries a_;
  std::string label_;
};

/// Result of the Nevanlinna-Pick transform b = 1 - 1/k. A negative b_n is
/// a conclusive certificate that k is not CNP; nonnegativity of every
/// retained b_n is evidence only ("up to N").
struct CnpData {
  RationalSeries b_series;  // b_0 = 0 always
  bool is_cnp_up_to_truncation = false;
  std::optional<int> first_negative_index;
  bool is_normalized = false;  // b_1 == 1
};

CnpData cnp_transform(const Kernel& k);

/// a_{|alpha|} * multinomial(alpha).
Rational a_alpha(const Kernel& k, const MultiIndex& alpha);

/// b_{|alpha|} * multinomial(alpha), alpha != 0.
Rational b_alpha(const Kernel& k, const MultiIndex& alpha);
Rational b_alpha(const CnpData& cnp, const MultiIndex& alpha);

Kernel kernel_power(const Kernel& k, int p);
Kernel schur_product(const Kernel& k1, const Kernel& k2);

/// Tensor product kernel on B_d x B_d; both factors share the dimension.
struct TensorKernel {
  Kernel left;
  Kernel right;
};

TensorKernel tensor_kernel(Kernel left, Kernel right);

/// Truncation-tail estimate for sum_{n>N} c_n rho^n via the empirical
/// coefficient ratio R = max c_{n+1}/c_n: c_N rho^{N+1} R / (1 - rho R).
/// Heuristic, reported as an estimate. Throws UnreliableTail when
/// rho*R >= 1; `soft` callers map that to +inf instead.
double geometric_tail_estimate(const std::vector<double>& coeffs, double rho);
double geometric_tail_estimate_soft(const std::vector<double>& coeffs, double rho);

struct EvalResult {
  std::complex<double> value;
  double tail_estimate;
};

/// Truncated evaluation sum_{n<=N} a_n <z,w>^n with the tail estimate
/// above at rho = |z||w|. Throws OutsideBall when an argument leaves the
/// ball or |z||w| exceeds rho_max.
EvalResult kernel_eval(const Kernel& k, const std::vector<std::complex<double>>& z,
                       const std::vector<std::complex<double>>& w,
                       double rho_max = 0.9);

// --- Coefficient maps ----------------------------------------------------
//
// Functions on the ball enter the norm computations as truncated monomial
// coefficient maps alpha -> f_alpha. Multiplication convolves exponents
// and drops everything above the stated total degree.

template <class S>
using CoeffMap = std::map<MultiIndex, S>;

/// Monomial coefficients of 1/k_w: 1 at alpha = 0 and -b_alpha *
/// conj(w)^alpha elsewhere, up to the kernel truncation degree.
template <class S>
CoeffMap<S> inverse_kernel_coeffs(const Kernel& k, const std::vector<S>& w);

template <class S>
CoeffMap<S> coeff_map_mul(const CoeffMap<S>& f, const CoeffMap<S>& g, int max_degree);

template <class S>
CoeffMap<S> coeff_map_pow(const CoeffMap<S>& f, int exponent, int max_degree);

/// Truncated squared RKHS norm sum |f_alpha|^2 / a_alpha. Monotone
/// non-decreasing in the truncation degree, hence a lower bound of the
/// true squared norm.
template <class S>
typename scalar_traits<S>::Real rkhs_norm_sq(const Kernel& k, const CoeffMap<S>& f);

struct MembershipReport {
  int m = 1;
  int p = 1;
  int half_degree = 0;
  int full_degree = 0;
  double norm_sq_half = 0.0;
  double norm_sq_full = 0.0;
  double growth_ratio = 1.0;
  bool divergence_flag = false;
};

/// Numerical membership evidence for k_w^{-m} in H(k^p): truncated norms
/// at degrees N/2 and N plus a divergence flag when the ratio exceeds the
/// threshold.
MembershipReport lemma21_membership_check(const Kernel& k, int p,
                                          const std::vector<std::complex<double>>& w,
                                          int m, double ratio_threshold = 1.001);

/// Truncated squared norm of k_w^{-m} in H(k^p) summed over degrees
/// <= degree_limit (helper shared by the membership check and stability
/// tests).
double inverse_kernel_power_norm_sq(const Kernel& k, int p,
                                    const std::vector<std::complex<double>>& w,
                                    int m, int degree_limit);

// --- point helpers --------------------------------------------------------

template <class S>
typename scalar_traits<S>::Real point_norm_sq(const std::vector<S>& v) {
  typename scalar_traits<S>::Real out{};
  for (const S& c : v) out += scalar_traits<S>::abs_sq(c);
  return out;
}

template <class S>
bool inside_unit_ball(const std::vector<S>& v) {
  return point_norm_sq(v) < typename scalar_traits<S>::Real(1);
}

/// v^alpha = prod v_i^{alpha_i}.
template <class S>
S monomial_value(const std::vector<S>& v, const MultiIndex& alpha) {
  S out = scalar_traits<S>::one();
  for (int i = 0; i < alpha.dimension(); ++i)
    out = out * scalar_traits<S>::pow(v[static_cast<std::size_t>(i)],
                                      static_cast<unsigned>(alpha[i]));
  return out;
}

// --- template definitions -------------------------------------------------

template <class S>
CoeffMap<S> inverse_kernel_coeffs(const Kernel& k, const std::vector<S>& w) {
  if (static_cast<int>(w.size()) != k.dimension())
    fail(ErrorKind::DimensionMismatch, "point dimension does not match kernel");
  if (!inside_unit_ball(w)) fail(ErrorKind::OutsideBall, "w must satisfy |w| < 1");
  CnpData cnp = cnp_transform(k);
  CoeffMap<S> out;
  for (const MultiIndex& alpha : multi_indices_up_to(k.dimension(), k.truncation_degree())) {
    if (alpha.is_zero()) {
      out.emplace(alpha, scalar_traits<S>::one());
      continue;
    }
    S wbar_alpha = monomial_value(w, alpha);
    wbar_alpha = scalar_traits<S>::conj(wbar_alpha);
    S coeff = scalar_traits<S>::from_rational(-b_alpha(cnp, alpha)) * wbar_alpha;
    out.emplace(alpha, coeff);
  }
  return out;
}

template <class S>
CoeffMap<S> coeff_map_mul(const CoeffMap<S>& f, const CoeffMap<S>& g, int max_degree) {
  CoeffMap<S> out;
  for (const auto& [alpha, fa] : f) {
    for (const auto& [beta, gb] : g) {
      if (alpha.degree() + beta.degree() > max_degree) continue;
      MultiIndex gamma = alpha + beta;
      S term = fa * gb;
      auto it = out.find(gamma);
      if (it == out.end())
        out.emplace(std::move(gamma), term);
      else
        it->second = it->second + term;
    }
  }
  return out;
}

template <class S>
CoeffMap<S> coeff_map_pow(const CoeffMap<S>& f, int exponent, int max_degree) {
  if (exponent < 1) fail(ErrorKind::Validation, "coefficient map power needs m >= 1");
  CoeffMap<S> out = f;
  for (int i = 1; i < exponent; ++i) out = coeff_map_mul(out, f, max_degree);
  return out;
}

template <class S>
typename scalar_traits<S>::Real rkhs_norm_sq(const Kernel& k, const CoeffMap<S>& f) {
  typename scalar_traits<S>::Real out{};
  for (const auto& [alpha, coeff] : f) {
    if (alpha.dimension() != k.dimension())
      fail(ErrorKind::DimensionMismatch, "coefficient map dimension mismatch");
    if (alpha.degree() > k.truncation_degree()) continue;
    out += scalar_traits<S>::abs_sq(coeff) /
           scalar_traits<S>::real_from_rational(a_alpha(k, alpha));
  }
  return out;
}

}  // namespace rkhsmult
