#pragma once

#include <functional>
#include <vector>

#include "rkhsmult/rational.hpp"

namespace rkhsmult {

/// One-variable formal power series with exact rational coefficients,
/// truncated at an explicit degree N (coeffs c_0..c_N, exactly N+1 of
/// them). Arithmetic on two series truncates to the shorter of the two;
/// nothing ever extends a series silently.
class RationalSeries {
public:
  explicit RationalSeries(std::vector<Rational> coeffs);

  static RationalSeries unit(int truncation_degree);  // 1, 0, 0, ...
  static RationalSeries from_fn(int truncation_degree,
                                const std::function<Rational(int)>& coeff);

  int truncation_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int n) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool operator==(const RationalSeries&) const = default;

private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product, truncated to min of the two truncation degrees.
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b);

/// Multiplicative inverse: series_mul(a, result) is the unit series up to
/// N. Throws ZeroConstantTerm when a_0 = 0.
RationalSeries series_reciprocal(const RationalSeries& a);

/// p-th power by repeated multiplication, p >= 1.
RationalSeries series_pow(const RationalSeries& a, int p);

}  // namespace rkhsmult
