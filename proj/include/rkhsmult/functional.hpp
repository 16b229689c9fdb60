#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rkhsmult/kernel.hpp"

namespace rkhsmult {

/// Bounded linear functional represented by its values on monomials,
/// alpha -> Lambda(z^alpha), for every |alpha| <= degree. Lambda(1) is the
/// value at alpha = 0. S selects the arithmetic mode (exact Gaussian
/// rationals or complex doubles).
template <class S>
class Functional {
public:
  Functional(int dimension, int degree, std::map<MultiIndex, S> values, std::string label)
      : dimension_(dimension),
        degree_(degree),
        values_(std::move(values)),
        label_(std::move(label)) {
    if (dimension_ < 1) fail(ErrorKind::Validation, "functional dimension must be >= 1");
    if (degree_ < 0) fail(ErrorKind::Validation, "functional degree must be >= 0");
    for (const MultiIndex& alpha : multi_indices_up_to(dimension_, degree_)) {
      if (!values_.count(alpha))
        fail(ErrorKind::Validation, "functional '" + label_ + "' missing value at " +
                                        multi_index_to_string(alpha));
    }
  }

  int dimension() const { return dimension_; }
  int degree() const { return degree_; }
  const std::string& label() const { return label_; }
  const std::map<MultiIndex, S>& values() const { return values_; }

  const S& value(const MultiIndex& alpha) const {
    auto it = values_.find(alpha);
    if (it == values_.end())
      fail(ErrorKind::DegreeOutOfRange,
           "functional has no value at " + multi_index_to_string(alpha));
    return it->second;
  }

  const S& value_at_zero() const { return value(MultiIndex::zero(dimension_)); }

private:
  int dimension_;
  int degree_;
  std::map<MultiIndex, S> values_;
  std::string label_;
};

/// Lambda(z^alpha) = v^alpha; the evaluation functional at v.
template <class S>
Functional<S> point_evaluation(const Kernel& k, const std::vector<S>& v) {
  if (static_cast<int>(v.size()) != k.dimension())
    fail(ErrorKind::DimensionMismatch, "point dimension does not match kernel");
  if (!inside_unit_ball(v)) fail(ErrorKind::OutsideBall, "evaluation point must satisfy |v| < 1");
  std::map<MultiIndex, S> values;
  for (const MultiIndex& alpha : multi_indices_up_to(k.dimension(), k.truncation_degree()))
    values.emplace(alpha, monomial_value(v, alpha));
  return Functional<S>(k.dimension(), k.truncation_degree(), std::move(values), "point");
}

/// The bounded, kernel-nonvanishing but non-multiplicative functional on
/// the disc: f -> f(0) + f'(0). Values 1, 1, 0, 0, ...
template <class S>
Functional<S> counterexample_functional(int degree) {
  std::map<MultiIndex, S> values;
  for (int n = 0; n <= degree; ++n)
    values.emplace(MultiIndex({n}), n <= 1 ? scalar_traits<S>::one() : scalar_traits<S>::zero());
  return Functional<S>(1, degree, std::move(values), "counterexample");
}

/// Lambda(z^alpha) = 1 for every alpha: the boundary-limit pattern.
/// Multiplicative on monomials; its truncated norm grows with N.
template <class S>
Functional<S> boundary_limit_ones(int dimension, int degree) {
  std::map<MultiIndex, S> values;
  for (const MultiIndex& alpha : multi_indices_up_to(dimension, degree))
    values.emplace(alpha, scalar_traits<S>::one());
  return Functional<S>(dimension, degree, std::move(values), "boundary_limit_ones");
}

/// Truncated squared Riesz norm sum a_alpha |Lambda(z^alpha)|^2, a
/// monotone-in-N lower bound of the true squared norm.
template <class S>
typename scalar_traits<S>::Real functional_norm_sq_truncated(const Functional<S>& f,
                                                             const Kernel& k) {
  if (f.dimension() != k.dimension())
    fail(ErrorKind::DimensionMismatch, "functional and kernel dimensions differ");
  if (f.degree() < k.truncation_degree())
    fail(ErrorKind::DegreeOutOfRange, "functional not defined up to the kernel truncation");
  typename scalar_traits<S>::Real out{};
  for (const MultiIndex& alpha : multi_indices_up_to(k.dimension(), k.truncation_degree()))
    out += scalar_traits<S>::real_from_rational(a_alpha(k, alpha)) *
           scalar_traits<S>::abs_sq(f.value(alpha));
  return out;
}

/// Lambda(k_w) = sum a_alpha Lambda(z^alpha) conj(w)^alpha, truncated.
template <class S>
S apply_to_kernel_function(const Functional<S>& f, const Kernel& k, const std::vector<S>& w) {
  if (f.dimension() != k.dimension() || static_cast<int>(w.size()) != k.dimension())
    fail(ErrorKind::DimensionMismatch, "functional, kernel and point dimensions must agree");
  if (!inside_unit_ball(w)) fail(ErrorKind::OutsideBall, "w must satisfy |w| < 1");
  if (f.degree() < k.truncation_degree())
    fail(ErrorKind::DegreeOutOfRange, "functional not defined up to the kernel truncation");
  S out = scalar_traits<S>::zero();
  for (const MultiIndex& alpha : multi_indices_up_to(k.dimension(), k.truncation_degree())) {
    S wbar = scalar_traits<S>::conj(monomial_value(w, alpha));
    out = out + scalar_traits<S>::from_rational(a_alpha(k, alpha)) * f.value(alpha) * wbar;
  }
  return out;
}

/// Lambda(1/k_w) = Lambda(1) - sum b_alpha Lambda(z^alpha) conj(w)^alpha.
/// Requires the kernel to be CNP up to its truncation.
template <class S>
S apply_to_inverse_kernel(const Functional<S>& f, const Kernel& k, const std::vector<S>& w) {
  if (f.dimension() != k.dimension() || static_cast<int>(w.size()) != k.dimension())
    fail(ErrorKind::DimensionMismatch, "functional, kernel and point dimensions must agree");
  if (!inside_unit_ball(w)) fail(ErrorKind::OutsideBall, "w must satisfy |w| < 1");
  CnpData cnp = cnp_transform(k);
  if (!cnp.is_cnp_up_to_truncation)
    fail(ErrorKind::NotCnp, "kernel '" + k.label() + "' has b_" +
                                std::to_string(*cnp.first_negative_index) + " < 0");
  S out = f.value_at_zero();
  for (const MultiIndex& alpha : multi_indices_up_to(k.dimension(), k.truncation_degree())) {
    if (alpha.is_zero()) continue;
    S wbar = scalar_traits<S>::conj(monomial_value(w, alpha));
    out = out - scalar_traits<S>::from_rational(b_alpha(cnp, alpha)) * f.value(alpha) * wbar;
  }
  return out;
}

/// Lambda(k_w^p) through the coefficients of the p-th kernel power.
template <class S>
S apply_to_kernel_power(const Functional<S>& f, const Kernel& k, int p,
                        const std::vector<S>& w) {
  return apply_to_kernel_function(f, kernel_power(k, p), w);
}

/// Second, independent route to Lambda(k_w^p): the truncated geometric
/// resummation sum_n binom(n+p-1, p-1) * S^n with
/// S = sum b_alpha Lambda(z^alpha) conj(w)^alpha. Requires |S| < 1.
template <class S>
S apply_series_route(const Functional<S>& f, const Kernel& k, int p, const std::vector<S>& w) {
  if (p < 1) fail(ErrorKind::Validation, "series route requires p >= 1");
  if (f.dimension() != k.dimension() || static_cast<int>(w.size()) != k.dimension())
    fail(ErrorKind::DimensionMismatch, "functional, kernel and point dimensions must agree");
  if (!inside_unit_ball(w)) fail(ErrorKind::OutsideBall, "w must satisfy |w| < 1");
  CnpData cnp = cnp_transform(k);
  if (!cnp.is_cnp_up_to_truncation)
    fail(ErrorKind::NotCnp, "kernel '" + k.label() + "' is not CNP up to truncation");

  S inner = scalar_traits<S>::zero();
  for (const MultiIndex& alpha : multi_indices_up_to(k.dimension(), k.truncation_degree())) {
    if (alpha.is_zero()) continue;
    S wbar = scalar_traits<S>::conj(monomial_value(w, alpha));
    inner = inner + scalar_traits<S>::from_rational(b_alpha(cnp, alpha)) * f.value(alpha) * wbar;
  }
  if (!(scalar_traits<S>::abs_sq(inner) < typename scalar_traits<S>::Real(1)))
    fail(ErrorKind::SeriesBoundViolated,
         "inner sum has modulus >= 1; geometric resummation invalid");

  S out = scalar_traits<S>::zero();
  S inner_pow = scalar_traits<S>::one();
  for (int n = 0; n <= k.truncation_degree(); ++n) {
    Rational coeff(binomial_int(n + p - 1, p - 1));
    out = out + scalar_traits<S>::from_rational(coeff) * inner_pow;
    inner_pow = inner_pow * inner;
  }
  return out;
}

// --- tensor-grid functionals -----------------------------------------------

/// Functional on H(k1 (x) k2) represented by its values on the monomial
/// grid x^alpha s^beta with |alpha| + |beta| <= degree.
template <class S>
class TensorFunctional {
public:
  using Key = std::pair<MultiIndex, MultiIndex>;

  TensorFunctional(int dimension, int degree, std::map<Key, S> values, std::string label)
      : dimension_(dimension),
        degree_(degree),
        values_(std::move(values)),
        label_(std::move(label)) {
    if (dimension_ < 1) fail(ErrorKind::Validation, "tensor functional dimension must be >= 1");
    for (const MultiIndex& alpha : multi_indices_up_to(dimension_, degree_))
      for (const MultiIndex& beta : multi_indices_up_to(dimension_, degree_ - alpha.degree()))
        if (!values_.count({alpha, beta}))
          fail(ErrorKind::Validation,
               "tensor functional '" + label_ + "' missing value at (" +
                   multi_index_to_string(alpha) + ", " + multi_index_to_string(beta) + ")");
  }

  int dimension() const { return dimension_; }
  int degree() const { return degree_; }
  const std::string& label() const { return label_; }
  const std::map<Key, S>& values() const { return values_; }

  const S& value(const MultiIndex& alpha, const MultiIndex& beta) const {
    auto it = values_.find({alpha, beta});
    if (it == values_.end())
      fail(ErrorKind::DegreeOutOfRange, "tensor functional has no value at (" +
                                            multi_index_to_string(alpha) + ", " +
                                            multi_index_to_string(beta) + ")");
    return it->second;
  }

  const S& value_at_zero() const {
    return value(MultiIndex::zero(dimension_), MultiIndex::zero(dimension_));
  }

  /// The same functional seen on 2d variables (x, s); lets the
  /// multiplicativity oracle run unchanged on tensor grids.
  Functional<S> as_functional_2d() const {
    std::map<MultiIndex, S> flat;
    for (const auto& [key, v] : values_) flat.emplace(key.first.concat(key.second), v);
    return Functional<S>(2 * dimension_, degree_, std::move(flat), label_ + "@2d");
  }

private:
  int dimension_;
  int degree_;
  std::map<Key, S> values_;
  std::string label_;
};

template <class S>
TensorFunctional<S> tensor_point_evaluation(const TensorKernel& k, const std::vector<S>& y,
                                            const std::vector<S>& t) {
  if (static_cast<int>(y.size()) != k.left.dimension() ||
      static_cast<int>(t.size()) != k.right.dimension())
    fail(ErrorKind::DimensionMismatch, "tensor evaluation point dimensions must match");
  if (!inside_unit_ball(y) || !inside_unit_ball(t))
    fail(ErrorKind::OutsideBall, "tensor evaluation points must lie in the ball");
  int degree = std::min(k.left.truncation_degree(), k.right.truncation_degree());
  int d = k.left.dimension();
  std::map<typename TensorFunctional<S>::Key, S> values;
  for (const MultiIndex& alpha : multi_indices_up_to(d, degree))
    for (const MultiIndex& beta : multi_indices_up_to(d, degree - alpha.degree()))
      values.emplace(std::make_pair(alpha, beta),
                     monomial_value(y, alpha) * monomial_value(t, beta));
  return TensorFunctional<S>(d, degree, std::move(values), "tensor_point");
}

/// values[(alpha, beta)] = f[alpha] * g[beta].
template <class S>
TensorFunctional<S> tensor_product_functional(const Functional<S>& f, const Functional<S>& g,
                                              int degree) {
  if (f.dimension() != g.dimension())
    fail(ErrorKind::DimensionMismatch, "tensor factors must share dimension");
  int d = f.dimension();
  std::map<typename TensorFunctional<S>::Key, S> values;
  for (const MultiIndex& alpha : multi_indices_up_to(d, degree))
    for (const MultiIndex& beta : multi_indices_up_to(d, degree - alpha.degree()))
      values.emplace(std::make_pair(alpha, beta), f.value(alpha) * g.value(beta));
  return TensorFunctional<S>(d, degree, std::move(values),
                             f.label() + " (x) " + g.label());
}

/// Truncated squared norm on H(k1 (x) k2):
/// sum a^1_alpha a^2_beta |Lambda(x^alpha s^beta)|^2.
template <class S>
typename scalar_traits<S>::Real tensor_norm_sq_truncated(const TensorFunctional<S>& f,
                                                         const TensorKernel& k) {
  if (f.dimension() != k.left.dimension())
    fail(ErrorKind::DimensionMismatch, "tensor functional and kernel dimensions differ");
  typename scalar_traits<S>::Real out{};
  for (const auto& [key, v] : f.values()) {
    const auto& [alpha, beta] = key;
    out += scalar_traits<S>::real_from_rational(a_alpha(k.left, alpha) * a_alpha(k.right, beta)) *
           scalar_traits<S>::abs_sq(v);
  }
  return out;
}

/// Lambda applied to (x, s) -> 1/k^1_y(x); constant in s.
template <class S>
S apply_tensor_to_left_inverse(const TensorFunctional<S>& f, const TensorKernel& k,
                               const std::vector<S>& y) {
  if (!inside_unit_ball(y)) fail(ErrorKind::OutsideBall, "y must satisfy |y| < 1");
  CnpData cnp = cnp_transform(k.left);
  if (!cnp.is_cnp_up_to_truncation)
    fail(ErrorKind::NotCnp, "left kernel is not CNP up to truncation");
  int d = f.dimension();
  S out = f.value_at_zero();
  for (const MultiIndex& alpha : multi_indices_up_to(d, f.degree())) {
    if (alpha.is_zero() || alpha.degree() > k.left.truncation_degree()) continue;
    S ybar = scalar_traits<S>::conj(monomial_value(y, alpha));
    out = out - scalar_traits<S>::from_rational(b_alpha(cnp, alpha)) *
                    f.value(alpha, MultiIndex::zero(d)) * ybar;
  }
  return out;
}

/// Lambda applied to (x, s) -> 1/k^2_t(s); constant in x.
template <class S>
S apply_tensor_to_right_inverse(const TensorFunctional<S>& f, const TensorKernel& k,
                                const std::vector<S>& t) {
  if (!inside_unit_ball(t)) fail(ErrorKind::OutsideBall, "t must satisfy |t| < 1");
  CnpData cnp = cnp_transform(k.right);
  if (!cnp.is_cnp_up_to_truncation)
    fail(ErrorKind::NotCnp, "right kernel is not CNP up to truncation");
  int d = f.dimension();
  S out = f.value_at_zero();
  for (const MultiIndex& beta : multi_indices_up_to(d, f.degree())) {
    if (beta.is_zero() || beta.degree() > k.right.truncation_degree()) continue;
    S tbar = scalar_traits<S>::conj(monomial_value(t, beta));
    out = out - scalar_traits<S>::from_rational(b_alpha(cnp, beta)) *
                    f.value(MultiIndex::zero(d), beta) * tbar;
  }
  return out;
}

/// Lambda(k^1_y (x) k^2_t) = sum a^1_alpha a^2_beta Lambda(x^alpha s^beta)
/// conj(y)^alpha conj(t)^beta over the truncated grid.
template <class S>
S apply_tensor_to_kernel_function(const TensorFunctional<S>& f, const TensorKernel& k,
                                  const std::vector<S>& y, const std::vector<S>& t) {
  if (!inside_unit_ball(y) || !inside_unit_ball(t))
    fail(ErrorKind::OutsideBall, "tensor sample points must lie in the ball");
  S out = scalar_traits<S>::zero();
  for (const auto& [key, v] : f.values()) {
    const auto& [alpha, beta] = key;
    if (alpha.degree() > k.left.truncation_degree() ||
        beta.degree() > k.right.truncation_degree())
      continue;
    S ybar = scalar_traits<S>::conj(monomial_value(y, alpha));
    S tbar = scalar_traits<S>::conj(monomial_value(t, beta));
    out = out + scalar_traits<S>::from_rational(a_alpha(k.left, alpha) * a_alpha(k.right, beta)) *
                    v * ybar * tbar;
  }
  return out;
}

}  // namespace rkhsmult
