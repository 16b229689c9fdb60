#include "rkhsmult/expr.hpp"

#include <cctype>
#include <fstream>

#include "json.hpp"

namespace rkhsmult {

namespace {

// Hand-rolled recursive-descent scanner/parser for the two small
// expression grammars. Errors carry the character offset.
class Scanner {
public:
  explicit Scanner(const std::string& text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool try_consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c))
      throw ParseError(pos_, std::string("expected '") + c + "' in '" + text_ + "'");
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected identifier in '" + text_ + "'");
    return text_.substr(start, pos_ - start);
  }

  /// Unsigned rational/decimal literal: digits[(/digits)|(.digits)][e[+-]digits]
  Rational unsigned_rational() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
            text_[pos_] == '/' ||
            ((text_[pos_] == 'e' || text_[pos_] == 'E') && pos_ > start &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ - 1]))) ||
            ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
             (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E'))))
      ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected number in '" + text_ + "'");
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const Error&) {
      throw ParseError(start, "malformed number in '" + text_ + "'");
    }
  }

  long long integer() {
    Rational q = signed_rational();
    if (denominator(q) != 1)
      throw ParseError(pos_, "expected an integer in '" + text_ + "'");
    return numerator(q).convert_to<long long>();
  }

  Rational signed_rational() {
    skip_space();
    bool negative = false;
    if (try_consume('-'))
      negative = true;
    else
      try_consume('+');
    Rational q = unsigned_rational();
    return negative ? -q : q;
  }

  /// Component: a | a+bi | a-bi | bi | i  (a, b rationals/decimals).
  GaussianRational complex_component() {
    skip_space();
    bool negative = false;
    if (try_consume('-'))
      negative = true;
    else
      try_consume('+');
    if (try_consume('i')) return {Rational(0), negative ? Rational(-1) : Rational(1)};
    Rational first = unsigned_rational();
    if (negative) first = -first;
    if (try_consume('i')) return {Rational(0), first};
    skip_space();
    if (peek() == '+' || peek() == '-') {
      bool imag_negative = text_[pos_] == '-';
      ++pos_;
      if (try_consume('i'))
        return {first, imag_negative ? Rational(-1) : Rational(1)};
      Rational second = unsigned_rational();
      expect('i');
      return {first, imag_negative ? -second : second};
    }
    return GaussianRational(first);
  }

  std::vector<GaussianRational> component_list() {
    expect('[');
    std::vector<GaussianRational> out;
    if (!try_consume(']')) {
      do {
        out.push_back(complex_component());
      } while (try_consume(','));
      expect(']');
    }
    return out;
  }

  std::vector<Rational> rational_list() {
    expect('[');
    std::vector<Rational> out;
    if (!try_consume(']')) {
      do {
        out.push_back(signed_rational());
      } while (try_consume(','));
      expect(']');
    }
    return out;
  }

  /// Raw text up to the next ')', trimmed; used for file paths.
  std::string raw_until_paren() {
    skip_space();
    std::size_t close = text_.find(')', pos_);
    if (close == std::string::npos)
      throw ParseError(pos_, "unterminated argument in '" + text_ + "'");
    std::string out = text_.substr(pos_, close - pos_);
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    pos_ = close;
    return out;
  }

private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

KernelVariant parse_kernel(Scanner& sc, int truncation_degree, const std::string& text);

Kernel parse_plain_kernel(Scanner& sc, int truncation_degree, const std::string& text) {
  std::size_t at = sc.pos();
  KernelVariant v = parse_kernel(sc, truncation_degree, text);
  if (std::holds_alternative<TensorKernel>(v))
    throw ParseError(at, "tensor kernels cannot be nested in '" + text + "'");
  return std::get<Kernel>(std::move(v));
}

KernelVariant parse_kernel(Scanner& sc, int truncation_degree, const std::string& text) {
  std::string name = sc.identifier();
  if (name == "szego") return Kernel::szego(truncation_degree);
  if (name == "dirichlet") return Kernel::dirichlet(truncation_degree);
  if (name == "drury_arveson") {
    sc.expect('(');
    long long d = sc.integer();
    sc.expect(')');
    if (d < 1) throw ParseError(sc.pos(), "drury_arveson needs dimension >= 1");
    return Kernel::drury_arveson(static_cast<int>(d), truncation_degree);
  }
  if (name == "coeffs") {
    sc.expect('(');
    auto coeffs = sc.rational_list();
    sc.expect(')');
    std::string label = "coeffs(n=" + std::to_string(coeffs.size()) + ")";
    return Kernel::from_coeffs(std::move(coeffs), std::move(label));
  }
  if (name == "power") {
    sc.expect('(');
    Kernel base = parse_plain_kernel(sc, truncation_degree, text);
    sc.expect(',');
    long long p = sc.integer();
    sc.expect(')');
    if (p < 1) throw ParseError(sc.pos(), "power needs p >= 1");
    return kernel_power(base, static_cast<int>(p));
  }
  if (name == "schur") {
    sc.expect('(');
    Kernel left = parse_plain_kernel(sc, truncation_degree, text);
    sc.expect(',');
    Kernel right = parse_plain_kernel(sc, truncation_degree, text);
    sc.expect(')');
    return schur_product(left, right);
  }
  if (name == "tensor") {
    sc.expect('(');
    Kernel left = parse_plain_kernel(sc, truncation_degree, text);
    sc.expect(',');
    Kernel right = parse_plain_kernel(sc, truncation_degree, text);
    sc.expect(')');
    return tensor_kernel(std::move(left), std::move(right));
  }
  throw ParseError(sc.pos() - name.size(), "unknown kernel '" + name + "' in '" + text + "'");
}

}  // namespace

KernelVariant parse_kernel_expr(const std::string& text, int truncation_degree) {
  Scanner sc(text);
  KernelVariant out = parse_kernel(sc, truncation_degree, text);
  if (!sc.at_end())
    throw ParseError(sc.pos(), "trailing input in kernel expression '" + text + "'");
  return out;
}

FunctionalSpec parse_functional_expr(const std::string& text) {
  Scanner sc(text);
  FunctionalSpec spec;
  spec.text = text;
  std::string name = sc.identifier();
  if (name == "point") {
    spec.kind = FunctionalSpec::Kind::Point;
    sc.expect('(');
    spec.point = sc.component_list();
    sc.expect(')');
    if (spec.point.empty()) throw ParseError(sc.pos(), "point([]) needs components");
  } else if (name == "counterexample") {
    spec.kind = FunctionalSpec::Kind::Counterexample;
  } else if (name == "boundary_limit_ones") {
    spec.kind = FunctionalSpec::Kind::BoundaryLimitOnes;
  } else if (name == "table") {
    spec.kind = FunctionalSpec::Kind::Table;
    sc.expect('(');
    spec.table_path = sc.raw_until_paren();
    sc.expect(')');
    if (spec.table_path.empty()) throw ParseError(sc.pos(), "table() needs a path");
  } else if (name == "tensor_point") {
    spec.kind = FunctionalSpec::Kind::TensorPoint;
    sc.expect('(');
    spec.tensor_left = sc.component_list();
    sc.expect(',');
    spec.tensor_right = sc.component_list();
    sc.expect(')');
    if (spec.tensor_left.empty() || spec.tensor_right.empty())
      throw ParseError(sc.pos(), "tensor_point needs two nonempty component lists");
  } else {
    throw ParseError(0, "unknown functional '" + name + "' in '" + text + "'");
  }
  if (!sc.at_end())
    throw ParseError(sc.pos(), "trailing input in functional expression '" + text + "'");
  return spec;
}

FunctionalTable load_functional_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Config, "cannot open functional table '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Config, "malformed JSON in '" + path + "': " + e.what());
  }
  FunctionalTable table;
  try {
    table.dimension = doc.at("dimension").get<int>();
    table.degree = doc.at("degree").get<int>();
    table.label = doc.value("label", "table(" + path + ")");
    for (const auto& entry : doc.at("values")) {
      std::vector<int> exponents = entry.at("alpha").get<std::vector<int>>();
      const auto& value = entry.at("value");
      GaussianRational v(parse_rational(value.at(0).get<std::string>()),
                         parse_rational(value.at(1).get<std::string>()));
      table.entries.emplace_back(MultiIndex(std::move(exponents)), std::move(v));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Config, "bad functional table '" + path + "': " + e.what());
  }
  for (const auto& [alpha, value] : table.entries) {
    if (alpha.dimension() != table.dimension)
      fail(ErrorKind::Validation, "table entry dimension mismatch in '" + path + "'");
    if (alpha.degree() > table.degree)
      fail(ErrorKind::DegreeOutOfRange, "table entry beyond declared degree in '" + path + "'");
  }
  return table;
}

}  // namespace rkhsmult
