#include "hyperred/symcore/parse.hpp"

#include <cctype>

#include "hyperred/errors.hpp"

namespace hyperred {
namespace {

// Products are kept as factor lists until a sum forces expansion, so that a
// printed denominator such as (a+1)*(b-2)^2 is read back factor by factor.
using Product = std::vector<RationalFunction>;

RationalFunction collapse(const Product& product) {
  RationalFunction value(1);
  for (const auto& f : product) value = value * f;
  return value;
}

class Parser {
 public:
  Parser(std::string_view text, const std::set<std::string>& arguments, int line, int column_offset)
      : text_(text), arguments_(arguments), line_(line), column_offset_(column_offset) {}

  RationalFunction parse_all() {
    skip_space();
    if (at_end()) fail("empty expression");
    Product value = expression();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return collapse(value);
  }

  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ParseError(message, line_, column_offset_ + static_cast<int>(at) + 1);
  }
  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Product expression() {
    Product first = term();
    skip_space();
    if (peek() != '+' && peek() != '-') return first;
    RationalFunction value = collapse(first);
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return {value};
      ++pos_;
      RationalFunction rhs = collapse(term());
      value = c == '+' ? value + rhs : value - rhs;
    }
  }

  Product term() {
    Product value = unary();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '*' && c != '/') return value;
      const std::size_t at = pos_++;
      Product rhs = unary();
      if (c == '*') {
        value.insert(value.end(), rhs.begin(), rhs.end());
        continue;
      }
      for (const auto& f : rhs) {
        if (f.is_zero()) fail("division by zero", at);
        value.push_back(RationalFunction(1) / f);
      }
    }
  }

  Product unary() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      Product value = unary();
      value.push_back(RationalFunction(-1));
      return value;
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Product power() {
    Product base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 4) fail("exponent too large", start);
    const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    Product result;
    for (const auto& f : base) {
      if (negative && f.is_zero()) fail("zero to a negative power", start);
      const RationalFunction g = negative ? RationalFunction(1) / f : f;
      for (int i = 0; i < e; ++i) result.push_back(g);
    }
    return result;
  }

  Product primary() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Product value = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      Rational value;
      value.get_num() = Integer(std::string(text_.substr(start, pos_ - start)));
      value.get_den() = 1;
      return {RationalFunction(value)};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      const bool is_arg = arguments_.count(name) > 0;
      return {RationalFunction(is_arg ? Symbol::argument(std::move(name)) : Symbol::parameter(std::move(name)))};
    }
    if (at_end()) fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const std::set<std::string>& arguments_;
  int line_;
  int column_offset_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(std::string_view text, const std::set<std::string>& arguments, int line) {
  return Parser(text, arguments, line, 0).parse_all();
}

ParameterExpr parse_parameter(std::string_view text, int line, int column_offset) {
  static const std::set<std::string> no_arguments;
  Parser parser(text, no_arguments, line, column_offset);
  const RationalFunction value = parser.parse_all();
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (!value.is_polynomial() || value.numerator().total_degree() > 1) {
    parser.fail("parameter must be affine: '" + std::string(text) + "'", first);
  }
  ParameterExpr::LinearPart linear;
  Rational constant = 0;
  for (const auto& t : value.numerator().terms()) {
    if (t.monomial.is_one()) {
      constant = t.coefficient;
    } else {
      linear[t.monomial.factors().front().first] = t.coefficient;
    }
  }
  return ParameterExpr::from_affine(std::move(linear), constant);
}

std::vector<ParameterExpr> parse_parameter_list(std::string_view text, int line) {
  std::vector<ParameterExpr> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    // An unmatched ')' stays in its segment for the expression parser to reject.
    if (c == ')' && depth > 0) --depth;
    if (i == text.size() || (c == ',' && depth == 0)) {
      out.push_back(parse_parameter(text.substr(start, i - start), line, static_cast<int>(start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace hyperred
