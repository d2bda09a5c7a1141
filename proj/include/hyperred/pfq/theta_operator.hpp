#pragma once

#include <map>
#include <string>

#include "hyperred/symcore/rational_function.hpp"

namespace hyperred {

// sum_k c_k theta^k with theta = z d/dz; coefficients sit to the left.
class ThetaOperator1D {
 public:
  using Coeffs = std::map<unsigned, RationalFunction>;

  ThetaOperator1D() = default;
  explicit ThetaOperator1D(Coeffs coeffs);

  static ThetaOperator1D identity() { return ThetaOperator1D({{0U, RationalFunction(1)}}); }
  static ThetaOperator1D monomial(unsigned power, RationalFunction coefficient = RationalFunction(1));

  const Coeffs& coeffs() const noexcept { return coeffs_; }
  RationalFunction coefficient(unsigned power) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero operator.
  int max_power() const noexcept { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.rbegin()->first); }

  void add_term(unsigned power, const RationalFunction& coefficient);
  ThetaOperator1D operator+(const ThetaOperator1D& rhs) const;
  ThetaOperator1D operator-(const ThetaOperator1D& rhs) const;
  // Left multiplication of every coefficient.
  ThetaOperator1D scaled(const RationalFunction& factor) const;

  std::string to_string() const;

  friend bool operator==(const ThetaOperator1D&, const ThetaOperator1D&) = default;

 private:
  Coeffs coeffs_;
};

// (z d/dz)^k r.
RationalFunction theta_apply(const RationalFunction& r, const Symbol& z, unsigned k = 1);

// outer o inner with theta passing through inner's coefficients by the
// Leibniz rule; no normalization.
ThetaOperator1D compose_raw(const ThetaOperator1D& outer, const ThetaOperator1D& inner, const Symbol& z);

// The operator applied to a function known in closed form.
RationalFunction apply_to_rational(const ThetaOperator1D& op, const RationalFunction& r, const Symbol& z);

Integer binomial(unsigned n, unsigned k);

}  // namespace hyperred
