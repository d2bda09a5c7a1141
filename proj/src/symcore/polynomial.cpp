#include "hyperred/symcore/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hyperred/errors.hpp"

namespace hyperred {
namespace {

bool descending(const Term& a, const Term& b) { return compare_grlex(a.monomial, b.monomial) > 0; }

// Merges two descending term lists, applying `sign` to the right-hand side.
std::vector<Term> merge_terms(const std::vector<Term>& lhs, const std::vector<Term>& rhs, int sign) {
  std::vector<Term> out;
  out.reserve(lhs.size() + rhs.size());
  auto a = lhs.begin();
  auto b = rhs.begin();
  while (a != lhs.end() && b != rhs.end()) {
    const auto order = compare_grlex(a->monomial, b->monomial);
    if (order > 0) {
      out.push_back(*a++);
    } else if (order < 0) {
      out.push_back(sign > 0 ? *b : Term{b->monomial, -b->coefficient});
      ++b;
    } else {
      Rational c = sign > 0 ? Rational(a->coefficient + b->coefficient)
                            : Rational(a->coefficient - b->coefficient);
      if (c != 0) out.push_back(Term{a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, lhs.end());
  for (; b != rhs.end(); ++b) out.push_back(sign > 0 ? *b : Term{b->monomial, -b->coefficient});
  return out;
}

std::string monomial_string(const Monomial& m) {
  std::string out;
  for (const auto& [symbol, exponent] : m.factors()) {
    if (!out.empty()) out += '*';
    out += symbol.name();
    if (exponent > 1) out += '^' + std::to_string(exponent);
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.push_back(Term{Monomial(), constant});
}

Polynomial::Polynomial(const Symbol& symbol) { terms_.push_back(Term{Monomial(symbol), Rational(1)}); }

Polynomial::Polynomial(Monomial monomial, const Rational& coefficient) {
  if (coefficient != 0) terms_.push_back(Term{std::move(monomial), coefficient});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), descending);
  Polynomial result;
  for (auto& t : terms) {
    if (!result.terms_.empty() && result.terms_.back().monomial == t.monomial) {
      result.terms_.back().coefficient += t.coefficient;
    } else {
      if (!result.terms_.empty() && result.terms_.back().coefficient == 0) result.terms_.pop_back();
      result.terms_.push_back(std::move(t));
    }
  }
  if (!result.terms_.empty() && result.terms_.back().coefficient == 0) result.terms_.pop_back();
  return result;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw DomainError("polynomial is not constant: " + to_string());
  return terms_.front().coefficient;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }

std::uint32_t Polynomial::degree_in(const Symbol& symbol) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(symbol));
  return d;
}

std::vector<Symbol> Polynomial::symbols() const {
  std::set<Symbol> seen;
  for (const auto& t : terms_)
    for (const auto& f : t.monomial.factors()) seen.insert(f.first);
  return {seen.begin(), seen.end()};
}

bool Polynomial::contains(const Symbol& symbol) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.exponent(symbol) > 0; });
}

Polynomial Polynomial::operator-() const {
  Polynomial result = *this;
  for (auto& t : result.terms_) t.coefficient = -t.coefficient;
  return result;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial result;
  result.terms_ = merge_terms(terms_, rhs.terms_, +1);
  return result;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial result;
  result.terms_ = merge_terms(terms_, rhs.terms_, -1);
  return result;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  if (rhs.terms_.size() == 1) return times_monomial(rhs.terms_[0].monomial, rhs.terms_[0].coefficient);
  if (terms_.size() == 1) return rhs.times_monomial(terms_[0].monomial, terms_[0].coefficient);
  std::vector<Term> products;
  products.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : rhs.terms_) products.push_back(Term{a.monomial * b.monomial, a.coefficient * b.coefficient});
  return from_terms(std::move(products));
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor == 0) return {};
  Polynomial result = *this;
  for (auto& t : result.terms_) t.coefficient *= factor;
  return result;
}

Polynomial Polynomial::times_monomial(const Monomial& monomial, const Rational& coefficient) const {
  if (coefficient == 0) return {};
  Polynomial result;
  result.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the term order.
  for (const auto& t : terms_) result.terms_.push_back(Term{t.monomial * monomial, t.coefficient * coefficient});
  return result;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (is_zero()) return Polynomial();
  const Term& lead = divisor.terms_.front();
  if (divisor.terms_.size() == 1) {
    Polynomial q;
    q.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      auto m = t.monomial.divide(lead.monomial);
      if (!m) return std::nullopt;
      q.terms_.push_back(Term{std::move(*m), t.coefficient / lead.coefficient});
    }
    return q;
  }
  struct Descending {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare_grlex(a, b) > 0; }
  };
  std::map<Monomial, Rational, Descending> remainder;
  for (const auto& t : terms_) remainder.emplace(t.monomial, t.coefficient);
  std::vector<Term> quotient;
  while (!remainder.empty()) {
    const auto top = remainder.begin();
    auto m = top->first.divide(lead.monomial);
    if (!m) return std::nullopt;
    Rational c = top->second / lead.coefficient;
    remainder.erase(top);
    for (auto t = std::next(divisor.terms_.begin()); t != divisor.terms_.end(); ++t) {
      Monomial key = t->monomial * *m;
      auto [it, inserted] = remainder.try_emplace(std::move(key));
      it->second -= c * t->coefficient;
      if (it->second == 0) remainder.erase(it);
    }
    quotient.push_back(Term{std::move(*m), std::move(c)});
  }
  // Quotient terms were produced in strictly descending order.
  Polynomial q;
  q.terms_ = std::move(quotient);
  return q;
}

Polynomial Polynomial::derivative(const Symbol& symbol) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = 0;
    Monomial rest = t.monomial.without(symbol, e);
    if (e == 0) continue;
    out.push_back(Term{rest * Monomial(symbol, e - 1), t.coefficient * e});
  }
  return from_terms(std::move(out));
}

Rational Polynomial::evaluate(const Bindings& bindings) const {
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational value = t.coefficient;
    for (const auto& [symbol, exponent] : t.monomial.factors()) {
      auto it = bindings.find(symbol.name());
      if (it == bindings.end()) throw DomainError("symbol '" + symbol.name() + "' is not bound");
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), exponent);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), exponent);
      value *= p;
    }
    total += value;
  }
  return total;
}

Polynomial Polynomial::substitute(const Bindings& bindings) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    Monomial kept;
    for (const auto& [symbol, exponent] : t.monomial.factors()) {
      auto it = bindings.find(symbol.name());
      if (it == bindings.end()) {
        kept = kept * Monomial(symbol, exponent);
        continue;
      }
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), exponent);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), exponent);
      c *= p;
    }
    out.push_back(Term{std::move(kept), std::move(c)});
  }
  return from_terms(std::move(out));
}

Rational Polynomial::content() const {
  if (terms_.empty()) return 1;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().monomial;
  for (const auto& t : terms_) {
    g = g.gcd(t.monomial);
    if (g.is_one()) break;
  }
  return g;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    std::string piece;
    if (t.monomial.is_one()) {
      piece = hyperred::to_string(t.coefficient);
    } else if (t.coefficient == 1) {
      piece = monomial_string(t.monomial);
    } else if (t.coefficient == -1) {
      piece = "-" + monomial_string(t.monomial);
    } else {
      piece = hyperred::to_string(t.coefficient) + "*" + monomial_string(t.monomial);
    }
    if (i == 0) {
      out = piece;
    } else if (piece.front() == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

std::strong_ordering compare(const Polynomial& lhs, const Polynomial& rhs) {
  const auto& a = lhs.terms();
  const auto& b = rhs.terms();
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (auto o = compare_grlex(a[i].monomial, b[i].monomial); o != 0) return o;
    if (a[i].coefficient != b[i].coefficient)
      return a[i].coefficient < b[i].coefficient ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

}  // namespace hyperred
