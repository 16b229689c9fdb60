#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rkhsmult/functional.hpp"

namespace rkhsmult {

using KernelVariant = std::variant<Kernel, TensorKernel>;

/// Kernel expression grammar:
///   szego | drury_arveson(d) | dirichlet | coeffs([r0,r1,...])
///   | power(expr, p) | schur(expr, expr) | tensor(expr, expr)
/// Rationals are written num/den; coeffs([...]) fixes its own truncation.
KernelVariant parse_kernel_expr(const std::string& text, int truncation_degree);

/// Parsed functional expression; materialized against a kernel (which
/// fixes dimension and truncation degree) and an arithmetic mode.
struct FunctionalSpec {
  enum class Kind { Point, Counterexample, Table, TensorPoint, BoundaryLimitOnes };
  Kind kind = Kind::Point;
  std::vector<GaussianRational> point;
  std::vector<GaussianRational> tensor_left;
  std::vector<GaussianRational> tensor_right;
  std::string table_path;
  std::string text;
};

/// Functional expression grammar:
///   point([v1,...]) | counterexample | table(path)
///   | tensor_point([y...],[t...]) | boundary_limit_ones
/// Components accept rationals, decimals and a+bi combinations.
FunctionalSpec parse_functional_expr(const std::string& text);

/// Monomial-value table loaded from a JSON file; absent multi-indices
/// default to zero.
struct FunctionalTable {
  int dimension = 1;
  int degree = 0;
  std::vector<std::pair<MultiIndex, GaussianRational>> entries;
  std::string label;
};

FunctionalTable load_functional_table(const std::string& path);

template <class S>
std::vector<S> materialize_point(const std::vector<GaussianRational>& values) {
  std::vector<S> out;
  out.reserve(values.size());
  for (const GaussianRational& v : values)
    out.push_back(scalar_traits<S>::from_parts(v.re, v.im));
  return out;
}

template <class S>
Functional<S> make_functional(const FunctionalSpec& spec, const Kernel& k) {
  switch (spec.kind) {
    case FunctionalSpec::Kind::Point: {
      auto v = materialize_point<S>(spec.point);
      if (static_cast<int>(v.size()) != k.dimension())
        fail(ErrorKind::DimensionMismatch,
             "point functional has " + std::to_string(v.size()) +
                 " components but kernel '" + k.label() + "' has dimension " +
                 std::to_string(k.dimension()));
      return point_evaluation(k, v);
    }
    case FunctionalSpec::Kind::Counterexample:
      if (k.dimension() != 1)
        fail(ErrorKind::DimensionMismatch, "counterexample functional is defined for d = 1");
      return counterexample_functional<S>(k.truncation_degree());
    case FunctionalSpec::Kind::BoundaryLimitOnes:
      return boundary_limit_ones<S>(k.dimension(), k.truncation_degree());
    case FunctionalSpec::Kind::Table: {
      FunctionalTable table = load_functional_table(spec.table_path);
      if (table.dimension != k.dimension())
        fail(ErrorKind::DimensionMismatch, "table functional dimension mismatch");
      if (table.degree < k.truncation_degree())
        fail(ErrorKind::DegreeOutOfRange,
             "table functional degree below the kernel truncation");
      std::map<MultiIndex, S> values;
      for (const MultiIndex& alpha : multi_indices_up_to(table.dimension, table.degree))
        values.emplace(alpha, scalar_traits<S>::zero());
      for (const auto& [alpha, v] : table.entries)
        values[alpha] = scalar_traits<S>::from_parts(v.re, v.im);
      return Functional<S>(table.dimension, table.degree, std::move(values), table.label);
    }
    case FunctionalSpec::Kind::TensorPoint:
      fail(ErrorKind::Config, "tensor_point functional needs a tensor kernel");
  }
  fail(ErrorKind::Config, "unhandled functional kind");
}

template <class S>
TensorFunctional<S> make_tensor_functional(const FunctionalSpec& spec, const TensorKernel& k) {
  if (spec.kind != FunctionalSpec::Kind::TensorPoint)
    fail(ErrorKind::Config,
         "tensor checks require a tensor_point functional, got '" + spec.text + "'");
  auto y = materialize_point<S>(spec.tensor_left);
  auto t = materialize_point<S>(spec.tensor_right);
  return tensor_point_evaluation(k, y, t);
}

}  // namespace rkhsmult
