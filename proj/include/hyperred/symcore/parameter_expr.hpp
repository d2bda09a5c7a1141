#pragma once

#include <map>
#include <string>

#include "hyperred/symcore/rational_function.hpp"

namespace hyperred {

// Affine parameter: sum of c_s * s over symbols, plus a rational constant,
// plus an integer shift. The constant and the shift are stored separately so
// that shifting never loses the original spelling.
class ParameterExpr {
 public:
  using LinearPart = std::map<Symbol, Rational>;

  ParameterExpr() = default;
  ParameterExpr(LinearPart linear, Rational constant, long shift = 0);

  static ParameterExpr symbol(const std::string& name, long shift = 0);
  static ParameterExpr integer(long value);
  // Splits the constant so that constant() lies in [0, 1) and the integer
  // part becomes the shift.
  static ParameterExpr from_affine(LinearPart linear, const Rational& constant);

  const LinearPart& linear_part() const noexcept { return linear_; }
  const Rational& constant() const noexcept { return constant_; }
  long shift() const noexcept { return shift_; }

  ParameterExpr shifted(long delta) const;

  // Fractional part of the constant; together with the linear part it
  // identifies the integer-shift family.
  Rational fraction() const;
  // Total integer offset from the family representative.
  long offset() const;
  bool same_family(const ParameterExpr& other) const;
  // Family member with the given offset.
  ParameterExpr with_offset(long offset) const;

  bool is_pure_integer() const;
  // Numeric value when the linear part is empty.
  Rational numeric_value() const;

  Polynomial polynomial() const;
  RationalFunction value() const { return RationalFunction(polynomial()); }
  Rational evaluate(const Bindings& bindings) const;

  ParameterExpr operator+(const ParameterExpr& rhs) const;
  ParameterExpr operator-(const ParameterExpr& rhs) const;
  ParameterExpr operator-() const;

  std::string to_string() const;

  // Structural equality of (linear part, constant, shift).
  friend bool operator==(const ParameterExpr&, const ParameterExpr&) = default;

 private:
  LinearPart linear_;
  Rational constant_ = 0;
  long shift_ = 0;
};

}  // namespace hyperred
