#pragma once

#include <compare>
#include <vector>

#include "rkhsmult/rational.hpp"

namespace rkhsmult {

/// Exponent tuple of a monomial z^alpha on C^d. Entries are non-negative;
/// comparison is lexicographic on the exponent vector, which fixes the
/// enumeration order used everywhere (maps, composition listings, reports).
class MultiIndex {
public:
  explicit MultiIndex(std::vector<int> exponents);
  static MultiIndex zero(int dimension);
  static MultiIndex unit(int dimension, int axis);

  int dimension() const { return static_cast<int>(exponents_.size()); }
  int degree() const;  // |alpha|
  int operator[](int i) const { return exponents_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return exponents_; }
  bool is_zero() const { return degree() == 0; }

  MultiIndex operator+(const MultiIndex& other) const;
  /// Componentwise difference; nullopt when any entry would go negative.
  std::optional<MultiIndex> minus(const MultiIndex& other) const;
  /// Concatenation (x-exponents followed by s-exponents); used to flatten
  /// tensor-grid functionals onto 2d variables.
  MultiIndex concat(const MultiIndex& other) const;

  auto operator<=>(const MultiIndex&) const = default;

private:
  std::vector<int> exponents_;
};

std::string multi_index_to_string(const MultiIndex& alpha);

/// |alpha|! / (alpha_1! ... alpha_d!), exact.
Int multinomial(const MultiIndex& alpha);

/// All alpha with given dimension and |alpha| <= max_degree, ascending
/// lexicographic order.
std::vector<MultiIndex> multi_indices_up_to(int dimension, int max_degree);

/// Ordered tuple of nonzero multi-indices summing to `target`.
struct Composition {
  std::vector<MultiIndex> parts;
  MultiIndex target;
};

/// All ordered r-tuples of nonzero multi-indices summing to alpha, each
/// exactly once, lexicographic in the part sequence. Throws
/// InvalidPartCount unless 1 <= r <= |alpha|.
std::vector<Composition> compositions(const MultiIndex& alpha, int r);

/// Concatenation of compositions(alpha, r) over r = 1..|alpha|.
std::vector<Composition> all_compositions(const MultiIndex& alpha);

}  // namespace rkhsmult
