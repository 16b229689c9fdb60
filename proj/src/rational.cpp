#include "rkhsmult/rational.hpp"

#include <charconv>
#include <cstdlib>

namespace rkhsmult {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::InvalidPartCount: return "InvalidPartCount";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::ZeroIndex: return "ZeroIndex";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OutsideBall: return "OutsideBall";
    case ErrorKind::UnreliableTail: return "UnreliableTail";
    case ErrorKind::NotCnp: return "NotCnp";
    case ErrorKind::SeriesBoundViolated: return "SeriesBoundViolated";
    case ErrorKind::NonRationalValues: return "NonRationalValues";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::Config: return "ConfigError";
  }
  return "UnknownError";
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string rational_to_string(const Rational& q) {
  Int num = numerator(q);
  Int den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// [sign] digits [. digits] [(e|E) [sign] digits], converted exactly.
std::optional<Rational> parse_decimal(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string int_part, frac_part;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    int_part.push_back(text[i++]);
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      frac_part.push_back(text[i++]);
  }
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  long long exp10 = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_neg = text[i] == '-';
      ++i;
    }
    std::string exp_digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      exp_digits.push_back(text[i++]);
    if (exp_digits.empty()) return std::nullopt;
    exp10 = std::stoll(exp_digits);
    if (exp_neg) exp10 = -exp10;
  }
  if (i != text.size()) return std::nullopt;

  Int mantissa = int_part.empty() ? Int(0) : Int(int_part);
  for (char c : frac_part) {
    mantissa *= 10;
    mantissa += c - '0';
  }
  Rational value(mantissa, 1);
  long long shift = exp10 - static_cast<long long>(frac_part.size());
  Int pow10 = 1;
  for (long long j = 0; j < std::llabs(shift); ++j) pow10 *= 10;
  if (shift >= 0)
    value *= Rational(pow10, 1);
  else
    value /= Rational(pow10, 1);
  if (negative) value = -value;
  return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    std::string num_digits = num;
    if (!num_digits.empty() && (num_digits[0] == '-' || num_digits[0] == '+'))
      num_digits.erase(0, 1);
    if (!all_digits(num_digits) || !all_digits(den))
      throw ParseError(0, "malformed rational '" + text + "'");
    Int d(den);
    if (d == 0) throw ParseError(slash + 1, "zero denominator in '" + text + "'");
    return Rational(Int(num), d);
  }
  if (auto dec = parse_decimal(text)) return *dec;
  throw ParseError(0, "malformed rational '" + text + "'");
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Int num = numerator(q);
  Int den = denominator(q);
  Int sn = boost::multiprecision::sqrt(num);
  Int sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

Rational rational_pow(const Rational& q, unsigned exponent) {
  Rational out(1);
  Rational base = q;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

Int factorial(unsigned n) {
  Int out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

Int binomial_int(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  return {a.re + b.re, a.im + b.im};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
  return {a.re - b.re, a.im - b.im};
}

GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational operator*(const Rational& a, const GaussianRational& b) {
  return {a * b.re, a * b.im};
}

GaussianRational gaussian_pow(const GaussianRational& z, unsigned exponent) {
  GaussianRational out(Rational(1));
  GaussianRational base = z;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1u;
  }
  return out;
}

std::string gaussian_to_string(const GaussianRational& z) {
  return rational_to_string(z.re) + (z.im < 0 ? " - " : " + ") +
         rational_to_string(boost::multiprecision::abs(z.im)) + "i";
}

std::string double_to_string(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::complex<double> to_complex(const GaussianRational& z) {
  return {to_double(z.re), to_double(z.im)};
}

}  // namespace rkhsmult
