#pragma once

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hyperred/symcore/monomial.hpp"
#include "hyperred/symcore/rational.hpp"

namespace hyperred {

// Values for symbols, keyed by symbol name.
using Bindings = std::map<std::string, Rational>;

struct Term {
  Monomial monomial;
  Rational coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse multivariate polynomial with rational coefficients. Terms are kept in
// strictly descending graded-lex order without zero coefficients, so equal
// polynomials have identical term lists.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Symbol& symbol);
  Polynomial(Monomial monomial, const Rational& coefficient);

  // Combines like terms and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Constant value; zero for the zero polynomial. Requires is_constant().
  Rational constant_value() const;
  const Term& leading_term() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(const Symbol& symbol) const;
  std::vector<Symbol> symbols() const;
  bool contains(const Symbol& symbol) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial& operator+=(const Polynomial& rhs) { return *this = *this + rhs; }
  Polynomial& operator-=(const Polynomial& rhs) { return *this = *this - rhs; }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }
  Polynomial scaled(const Rational& factor) const;
  Polynomial times_monomial(const Monomial& monomial, const Rational& coefficient) const;
  Polynomial pow(unsigned exponent) const;

  // Exact quotient, or nullopt when `divisor` does not divide. Throws
  // DomainError when the divisor is zero.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  Polynomial derivative(const Symbol& symbol) const;

  // Full evaluation; every symbol must be bound (DomainError otherwise).
  Rational evaluate(const Bindings& bindings) const;
  // Partial evaluation: bound symbols are replaced, the rest stay symbolic.
  Polynomial substitute(const Bindings& bindings) const;

  // Positive rational c such that this/c has coprime integer coefficients.
  Rational content() const;
  Monomial monomial_content() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

// Total order on polynomials used to sort denominator factors.
std::strong_ordering compare(const Polynomial& lhs, const Polynomial& rhs);

inline std::ostream& operator<<(std::ostream& out, const Polynomial& value) { return out << value.to_string(); }

}  // namespace hyperred
