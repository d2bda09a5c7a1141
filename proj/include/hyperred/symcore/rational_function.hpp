#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hyperred/symcore/polynomial.hpp"

namespace hyperred {

// Exact multivariate rational function numerator / prod(factor^multiplicity).
//
// Canonical form:
//   * every denominator factor is a non-constant primitive polynomial with
//     integer coefficients and positive leading coefficient (graded-lex);
//   * factors are pairwise distinct and sorted; none divides the numerator;
//   * all scalar content lives in the numerator;
//   * zero has an empty denominator.
// Cancellation only trial-divides the numerator by the stored factors, so the
// form is canonical whenever the factors are irreducible, which holds for the
// affine and quadratic denominators the reduction algorithms produce.
class RationalFunction {
 public:
  struct Factor {
    Polynomial base;
    unsigned multiplicity = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  RationalFunction() = default;
  RationalFunction(const Rational& constant) : numerator_(constant) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long constant) : numerator_(Rational(constant)) {}   // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial numerator) : numerator_(std::move(numerator)) {}  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(const Symbol& symbol) : numerator_(symbol) {}

  // numerator / denominator, with the denominator split into factors.
  static RationalFunction quotient(const Polynomial& numerator, const Polynomial& denominator);

  const Polynomial& numerator() const noexcept { return numerator_; }
  const std::vector<Factor>& denominator_factors() const noexcept { return factors_; }
  // Expanded product of the denominator factors.
  Polynomial denominator() const;

  bool is_zero() const noexcept { return numerator_.is_zero(); }
  bool is_polynomial() const noexcept { return factors_.empty(); }
  bool is_constant() const noexcept { return factors_.empty() && numerator_.is_constant(); }
  bool contains(const Symbol& symbol) const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& rhs) const;
  RationalFunction operator-(const RationalFunction& rhs) const;
  RationalFunction operator*(const RationalFunction& rhs) const;
  // Throws DomainError when rhs is zero.
  RationalFunction operator/(const RationalFunction& rhs) const;
  RationalFunction& operator+=(const RationalFunction& rhs) { return *this = *this + rhs; }
  RationalFunction& operator-=(const RationalFunction& rhs) { return *this = *this - rhs; }
  RationalFunction& operator*=(const RationalFunction& rhs) { return *this = *this * rhs; }
  RationalFunction& operator/=(const RationalFunction& rhs) { return *this = *this / rhs; }
  RationalFunction pow(int exponent) const;

  RationalFunction derivative(const Symbol& symbol) const;

  // Throws PoleError naming the vanishing factor.
  Rational evaluate(const Bindings& bindings) const;
  RationalFunction substitute(const Bindings& bindings) const;

  // Equality of N1*D2 and N2*D1 after expansion; independent of factorization.
  bool equals_by_cross_multiplication(const RationalFunction& other) const;

  // Explicit '*' and parenthesized factors, re-parseable by the expression parser.
  std::string to_string() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  void absorb_denominator(const Polynomial& base, unsigned multiplicity);
  void insert_primitive_factor(Polynomial base, unsigned multiplicity);
  void cancel();
  Polynomial cofactor(const std::vector<Factor>& lcm) const;

  Polynomial numerator_;
  std::vector<Factor> factors_;
};

RationalFunction operator+(const Rational& lhs, const RationalFunction& rhs);
RationalFunction operator*(const Rational& lhs, const RationalFunction& rhs);

inline std::ostream& operator<<(std::ostream& out, const RationalFunction& value) { return out << value.to_string(); }

}  // namespace hyperred
