#pragma once

#include <map>

#include "hyperred/appell/spec.hpp"
#include "hyperred/appell/theta_operator.hpp"

namespace hyperred {

// theta_xx = P0 theta_xy + P1 theta_x + P2 theta_y + P3,
// theta_yy = R0 theta_xy + R1 theta_x + R2 theta_y + R3.
struct PDECoefficients {
  RationalFunction P0, P1, P2, P3;
  RationalFunction R0, R1, R2, R3;
};

PDECoefficients pde_coefficients(const AppellSpec& spec);

struct SecondOrderRules {
  ThetaOperator2D xx;
  ThetaOperator2D yy;
};
// Right-hand sides over {1, tx, ty, txy}; for F1 the mixed term is already
// eliminated with the xy rule, leaving {1, tx, ty}.
SecondOrderRules second_order_rules(const AppellSpec& spec);

// theta_xy = b2 y/(x-y) theta_x - b1 x/(x-y) theta_y. DomainError unless F1.
ThetaOperator2D f1_xy_rule(const AppellSpec& spec);

struct ThirdOrderRules {
  ThetaOperator2D xxy;
  ThetaOperator2D xyy;
};
// Closed forms per kind, over {1, tx, ty, txy}. DomainError for F1.
ThirdOrderRules third_order_rules(const AppellSpec& spec);
// Same rules obtained by solving the two compatibility equations of the
// second-order system; independent of the closed forms.
ThirdOrderRules generic_third_order_rules(const AppellSpec& spec);

// Whether theta_x^i theta_y^j belongs to the basis of the kind.
bool is_basis_monomial(AppellKind kind, unsigned i, unsigned j);

// Rewrites operators acting on one fixed Appell function into its basis.
// Images of theta monomials are memoized.
class Normalizer2D {
 public:
  explicit Normalizer2D(const AppellSpec& spec);

  ThetaOperator2D normalize(const ThetaOperator2D& op);
  const AppellSpec& spec() const noexcept { return spec_; }

 private:
  const ThetaOperator2D& image(unsigned i, unsigned j);

  AppellSpec spec_;
  SecondOrderRules second_;
  ThetaOperator2D xy_;
  ThirdOrderRules third_;
  std::map<ThetaOperator2D::Key, ThetaOperator2D> images_;
};

ThetaOperator2D normalize_2d(const ThetaOperator2D& op, const AppellSpec& spec);

}  // namespace hyperred
