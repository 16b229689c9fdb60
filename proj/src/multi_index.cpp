#include "rkhsmult/multi_index.hpp"

#include <numeric>

namespace rkhsmult {

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty())
    fail(ErrorKind::Validation, "multi-index needs dimension >= 1");
  for (int e : exponents_)
    if (e < 0) fail(ErrorKind::Validation, "multi-index entries must be >= 0");
}

MultiIndex MultiIndex::zero(int dimension) {
  return MultiIndex(std::vector<int>(static_cast<std::size_t>(dimension), 0));
}

MultiIndex MultiIndex::unit(int dimension, int axis) {
  std::vector<int> e(static_cast<std::size_t>(dimension), 0);
  e.at(static_cast<std::size_t>(axis)) = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (dimension() != other.dimension())
    fail(ErrorKind::DimensionMismatch, "multi-index dimensions differ");
  std::vector<int> out = exponents_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.exponents_[i];
  return MultiIndex(std::move(out));
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& other) const {
  if (dimension() != other.dimension())
    fail(ErrorKind::DimensionMismatch, "multi-index dimensions differ");
  std::vector<int> out = exponents_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] -= other.exponents_[i];
    if (out[i] < 0) return std::nullopt;
  }
  return MultiIndex(std::move(out));
}

MultiIndex MultiIndex::concat(const MultiIndex& other) const {
  std::vector<int> out = exponents_;
  out.insert(out.end(), other.exponents_.begin(), other.exponents_.end());
  return MultiIndex(std::move(out));
}

std::string multi_index_to_string(const MultiIndex& alpha) {
  std::string out = "(";
  for (int i = 0; i < alpha.dimension(); ++i) {
    if (i) out += ",";
    out += std::to_string(alpha[i]);
  }
  return out + ")";
}

Int multinomial(const MultiIndex& alpha) {
  Int out = factorial(static_cast<unsigned>(alpha.degree()));
  for (int i = 0; i < alpha.dimension(); ++i)
    out /= factorial(static_cast<unsigned>(alpha[i]));
  return out;
}

namespace {

void enumerate_up_to(int dimension, int max_degree, std::vector<int>& prefix,
                     std::vector<MultiIndex>& out) {
  if (static_cast<int>(prefix.size()) == dimension) {
    out.push_back(MultiIndex(prefix));
    return;
  }
  int used = std::accumulate(prefix.begin(), prefix.end(), 0);
  for (int e = 0; e <= max_degree - used; ++e) {
    prefix.push_back(e);
    enumerate_up_to(dimension, max_degree, prefix, out);
    prefix.pop_back();
  }
}

// Nonzero beta <= gamma componentwise, ascending lexicographic.
std::vector<MultiIndex> nonzero_subindices(const MultiIndex& gamma) {
  std::vector<MultiIndex> out;
  std::vector<int> current(static_cast<std::size_t>(gamma.dimension()), 0);
  for (;;) {
    // Odometer increment, rightmost fastest, bounded by gamma.
    int i = gamma.dimension() - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == gamma[i]) {
      current[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
    out.push_back(MultiIndex(current));
  }
  return out;
}

void compose_recursive(const MultiIndex& remaining, int parts_left,
                       std::vector<MultiIndex>& prefix, const MultiIndex& target,
                       std::vector<Composition>& out) {
  if (parts_left == 1) {
    if (remaining.degree() >= 1) {
      auto parts = prefix;
      parts.push_back(remaining);
      out.push_back(Composition{std::move(parts), target});
    }
    return;
  }
  for (const MultiIndex& part : nonzero_subindices(remaining)) {
    auto rest = remaining.minus(part);
    if (!rest || rest->degree() < parts_left - 1) continue;
    prefix.push_back(part);
    compose_recursive(*rest, parts_left - 1, prefix, target, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_up_to(int dimension, int max_degree) {
  if (dimension < 1) fail(ErrorKind::Validation, "dimension must be >= 1");
  if (max_degree < 0) fail(ErrorKind::DegreeOutOfRange, "max_degree must be >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> prefix;
  enumerate_up_to(dimension, max_degree, prefix, out);
  return out;
}

std::vector<Composition> compositions(const MultiIndex& alpha, int r) {
  if (r < 1 || r > alpha.degree())
    fail(ErrorKind::InvalidPartCount,
         "part count " + std::to_string(r) + " not in [1, " +
             std::to_string(alpha.degree()) + "] for " + multi_index_to_string(alpha));
  std::vector<Composition> out;
  std::vector<MultiIndex> prefix;
  compose_recursive(alpha, r, prefix, alpha, out);
  return out;
}

std::vector<Composition> all_compositions(const MultiIndex& alpha) {
  std::vector<Composition> out;
  for (int r = 1; r <= alpha.degree(); ++r) {
    auto part = compositions(alpha, r);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace rkhsmult
