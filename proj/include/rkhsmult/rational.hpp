#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "rkhsmult/errors.hpp"

namespace rkhsmult {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& q);

/// Canonical "p" / "p/q" form, always reduced, denominator positive.
std::string rational_to_string(const Rational& q);

/// Accepts "p", "p/q", and decimal/scientific literals ("0.25", "-1e-9").
/// Decimal literals convert exactly (base-10), not through a double.
Rational parse_rational(const std::string& text);

/// sqrt(q) when q is a perfect square of a rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& q);

Rational rational_pow(const Rational& q, unsigned exponent);

Int factorial(unsigned n);
Int binomial_int(long long n, long long k);

/// Complex number with exact rational real and imaginary parts. The
/// exact-arithmetic counterpart of std::complex<double> throughout the
/// functional and verification code.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real, Rational imag)
      : re(std::move(real)), im(std::move(imag)) {}
  explicit GaussianRational(const Rational& real) : re(real), im(0) {}
  explicit GaussianRational(long long real) : re(real), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }
  Rational abs_sq() const { return re * re + im * im; }

  bool operator==(const GaussianRational&) const = default;
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator*(const Rational& a, const GaussianRational& b);
GaussianRational gaussian_pow(const GaussianRational& z, unsigned exponent);

std::string gaussian_to_string(const GaussianRational& z);

/// Shortest round-trip decimal form of a double (deterministic).
std::string double_to_string(double x);

std::complex<double> to_complex(const GaussianRational& z);

/// The two scalar modes. Float mode computes in std::complex<double>;
/// exact mode in GaussianRational. `Real` is the type of squared norms
/// and other real-valued results in that mode.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<std::complex<double>> {
  using Real = double;
  static constexpr bool is_exact = false;
  static const char* mode_name() { return "float"; }

  static std::complex<double> zero() { return {0.0, 0.0}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static std::complex<double> from_rational(const Rational& q) {
    return {to_double(q), 0.0};
  }
  static std::complex<double> from_parts(const Rational& re, const Rational& im) {
    return {to_double(re), to_double(im)};
  }
  static std::complex<double> conj(const std::complex<double>& z) {
    return std::conj(z);
  }
  static Real abs_sq(const std::complex<double>& z) { return std::norm(z); }
  static double abs_approx(const std::complex<double>& z) { return std::abs(z); }
  static double real_to_double(Real x) { return x; }
  static Real real_from_rational(const Rational& q) { return to_double(q); }
  static std::complex<double> pow(std::complex<double> z, unsigned e) {
    std::complex<double> out{1.0, 0.0};
    for (unsigned i = 0; i < e; ++i) out *= z;
    return out;
  }
  static std::pair<std::string, std::string> serialize(const std::complex<double>& z) {
    return {double_to_string(z.real()), double_to_string(z.imag())};
  }
};

template <>
struct scalar_traits<GaussianRational> {
  using Real = Rational;
  static constexpr bool is_exact = true;
  static const char* mode_name() { return "exact"; }

  static GaussianRational zero() { return GaussianRational(Rational(0)); }
  static GaussianRational one() { return GaussianRational(Rational(1)); }
  static GaussianRational from_rational(const Rational& q) {
    return GaussianRational(q);
  }
  static GaussianRational from_parts(const Rational& re, const Rational& im) {
    return {re, im};
  }
  static GaussianRational conj(const GaussianRational& z) { return z.conj(); }
  static Real abs_sq(const GaussianRational& z) { return z.abs_sq(); }
  static double abs_approx(const GaussianRational& z) {
    return std::abs(to_complex(z));
  }
  static double real_to_double(const Real& x) { return to_double(x); }
  static Real real_from_rational(const Rational& q) { return q; }
  static GaussianRational pow(const GaussianRational& z, unsigned e) {
    return gaussian_pow(z, e);
  }
  static std::pair<std::string, std::string> serialize(const GaussianRational& z) {
    return {rational_to_string(z.re), rational_to_string(z.im)};
  }
};

}  // namespace rkhsmult
