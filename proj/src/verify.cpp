#include "rkhsmult/verify.hpp"

#include <numbers>

namespace rkhsmult {

std::vector<std::pair<Rational, Rational>> default_base_scalars() {
  return {
      {Rational(0), Rational(0)},
      {Rational(3, 10), Rational(0)},
      {Rational(-3, 10), Rational(0)},
      {Rational(2, 5), Rational(0)},
      {Rational(-2, 5), Rational(0)},
      {Rational(1, 4), Rational(1, 4)},
      {Rational(-1, 4), Rational(1, 4)},
      {Rational(1, 4), Rational(-1, 4)},
      {Rational(1, 8), Rational(0)},
      {Rational(0), Rational(-2, 5)},
  };
}

std::vector<std::complex<double>> dense_base_scalars() {
  std::vector<std::complex<double>> out;
  out.reserve(100);
  for (int i = 1; i <= 5; ++i) {
    double radius = 0.05 * i;
    for (int j = 0; j < 20; ++j) {
      double angle = 2.0 * std::numbers::pi * j / 20.0;
      out.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
    }
  }
  return out;
}

}  // namespace rkhsmult
