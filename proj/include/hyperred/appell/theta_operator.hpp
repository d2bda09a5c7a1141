#pragma once

#include <map>
#include <string>
#include <utility>

#include "hyperred/symcore/rational_function.hpp"

namespace hyperred {

// sum c_ij theta_x^i theta_y^j, coefficients on the left.
class ThetaOperator2D {
 public:
  using Key = std::pair<unsigned, unsigned>;
  using Coeffs = std::map<Key, RationalFunction>;

  ThetaOperator2D() = default;
  explicit ThetaOperator2D(Coeffs coeffs);

  static ThetaOperator2D identity() { return ThetaOperator2D({{{0U, 0U}, RationalFunction(1)}}); }
  static ThetaOperator2D monomial(unsigned i, unsigned j, RationalFunction coefficient = RationalFunction(1));

  const Coeffs& coeffs() const noexcept { return coeffs_; }
  RationalFunction coefficient(unsigned i, unsigned j) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  unsigned max_x() const;
  unsigned max_y() const;

  void add_term(unsigned i, unsigned j, const RationalFunction& coefficient);
  ThetaOperator2D operator+(const ThetaOperator2D& rhs) const;
  ThetaOperator2D operator-(const ThetaOperator2D& rhs) const;
  ThetaOperator2D scaled(const RationalFunction& factor) const;
  // Exchanges the roles of theta_x and theta_y.
  ThetaOperator2D transposed() const;

  std::string to_string() const;

  friend bool operator==(const ThetaOperator2D&, const ThetaOperator2D&) = default;

 private:
  Coeffs coeffs_;
};

// outer o inner, Leibniz rule in both variables; no normalization.
ThetaOperator2D compose_raw(const ThetaOperator2D& outer, const ThetaOperator2D& inner, const Symbol& x,
                            const Symbol& y);

}  // namespace hyperred
