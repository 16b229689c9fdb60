#include "rkhsmult/series.hpp"

#include <algorithm>

namespace rkhsmult {

RationalSeries::RationalSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    fail(ErrorKind::Validation, "series needs at least the constant coefficient");
}

RationalSeries RationalSeries::unit(int truncation_degree) {
  if (truncation_degree < 0)
    fail(ErrorKind::DegreeOutOfRange, "truncation degree must be >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(truncation_degree) + 1, Rational(0));
  c[0] = 1;
  return RationalSeries(std::move(c));
}

RationalSeries RationalSeries::from_fn(int truncation_degree,
                                       const std::function<Rational(int)>& coeff) {
  if (truncation_degree < 0)
    fail(ErrorKind::DegreeOutOfRange, "truncation degree must be >= 0");
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(truncation_degree) + 1);
  for (int n = 0; n <= truncation_degree; ++n) c.push_back(coeff(n));
  return RationalSeries(std::move(c));
}

const Rational& RationalSeries::operator[](int n) const {
  if (n < 0 || n > truncation_degree())
    fail(ErrorKind::DegreeOutOfRange,
         "coefficient index " + std::to_string(n) + " beyond truncation " +
             std::to_string(truncation_degree()));
  return coeffs_[static_cast<std::size_t>(n)];
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
  int n_out = std::min(a.truncation_degree(), b.truncation_degree());
  std::vector<Rational> c(static_cast<std::size_t>(n_out) + 1, Rational(0));
  for (int n = 0; n <= n_out; ++n) {
    Rational sum(0);
    for (int i = 0; i <= n; ++i) sum += a[i] * b[n - i];
    c[static_cast<std::size_t>(n)] = sum;
  }
  return RationalSeries(std::move(c));
}

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) {
  int n_out = std::min(a.truncation_degree(), b.truncation_degree());
  std::vector<Rational> c(static_cast<std::size_t>(n_out) + 1);
  for (int n = 0; n <= n_out; ++n) c[static_cast<std::size_t>(n)] = a[n] + b[n];
  return RationalSeries(std::move(c));
}

RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b) {
  int n_out = std::min(a.truncation_degree(), b.truncation_degree());
  std::vector<Rational> c(static_cast<std::size_t>(n_out) + 1);
  for (int n = 0; n <= n_out; ++n) c[static_cast<std::size_t>(n)] = a[n] - b[n];
  return RationalSeries(std::move(c));
}

RationalSeries series_reciprocal(const RationalSeries& a) {
  if (a[0] == 0)
    fail(ErrorKind::ZeroConstantTerm, "series with a_0 = 0 has no reciprocal");
  int n_max = a.truncation_degree();
  std::vector<Rational> c(static_cast<std::size_t>(n_max) + 1, Rational(0));
  c[0] = Rational(1) / a[0];
  for (int n = 1; n <= n_max; ++n) {
    Rational sum(0);
    for (int j = 1; j <= n; ++j) sum += a[j] * c[static_cast<std::size_t>(n - j)];
    c[static_cast<std::size_t>(n)] = -sum / a[0];
  }
  return RationalSeries(std::move(c));
}

RationalSeries series_pow(const RationalSeries& a, int p) {
  if (p < 1) fail(ErrorKind::Validation, "series power requires p >= 1");
  RationalSeries out = a;
  for (int i = 1; i < p; ++i) out = series_mul(out, a);
  return out;
}

}  // namespace rkhsmult
