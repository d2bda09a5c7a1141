#include "hyperred/symcore/parameter_expr.hpp"

#include "hyperred/errors.hpp"

namespace hyperred {

ParameterExpr::ParameterExpr(LinearPart linear, Rational constant, long shift)
    : linear_(std::move(linear)), constant_(std::move(constant)), shift_(shift) {
  std::erase_if(linear_, [](const auto& entry) { return entry.second == 0; });
  for (const auto& [s, c] : linear_) {
    if (s.is_argument()) throw DomainError("argument symbol '" + s.name() + "' used as a parameter");
  }
}

ParameterExpr ParameterExpr::symbol(const std::string& name, long shift) {
  return ParameterExpr({{Symbol::parameter(name), Rational(1)}}, 0, shift);
}

ParameterExpr ParameterExpr::integer(long value) { return ParameterExpr({}, 0, value); }

ParameterExpr ParameterExpr::from_affine(LinearPart linear, const Rational& constant) {
  const Integer whole = hyperred::floor(constant);
  if (!whole.fits_slong_p()) throw DomainError("parameter constant out of range");
  return ParameterExpr(std::move(linear), constant - Rational(whole), whole.get_si());
}

ParameterExpr ParameterExpr::shifted(long delta) const {
  ParameterExpr result = *this;
  result.shift_ += delta;
  return result;
}

Rational ParameterExpr::fraction() const { return constant_ - Rational(hyperred::floor(constant_)); }

long ParameterExpr::offset() const { return hyperred::floor(constant_).get_si() + shift_; }

bool ParameterExpr::same_family(const ParameterExpr& other) const {
  return linear_ == other.linear_ && fraction() == other.fraction();
}

ParameterExpr ParameterExpr::with_offset(long offset) const { return ParameterExpr(linear_, fraction(), offset); }

bool ParameterExpr::is_pure_integer() const { return linear_.empty() && is_integer(constant_); }

Rational ParameterExpr::numeric_value() const {
  if (!linear_.empty()) throw DomainError("parameter " + to_string() + " is symbolic");
  return constant_ + shift_;
}

Polynomial ParameterExpr::polynomial() const {
  std::vector<Term> terms;
  for (const auto& [s, c] : linear_) terms.push_back(Term{Monomial(s), c});
  terms.push_back(Term{Monomial(), constant_ + shift_});
  return Polynomial::from_terms(std::move(terms));
}

Rational ParameterExpr::evaluate(const Bindings& bindings) const { return polynomial().evaluate(bindings); }

ParameterExpr ParameterExpr::operator+(const ParameterExpr& rhs) const {
  LinearPart linear = linear_;
  for (const auto& [s, c] : rhs.linear_) linear[s] += c;
  return ParameterExpr(std::move(linear), constant_ + rhs.constant_, shift_ + rhs.shift_);
}

ParameterExpr ParameterExpr::operator-() const {
  LinearPart linear = linear_;
  for (auto& entry : linear) entry.second = -entry.second;
  return ParameterExpr(std::move(linear), -constant_, -shift_);
}

ParameterExpr ParameterExpr::operator-(const ParameterExpr& rhs) const { return *this + (-rhs); }

std::string ParameterExpr::to_string() const {
  std::string out = polynomial().to_string();
  std::erase(out, ' ');
  return out;
}

}  // namespace hyperred
