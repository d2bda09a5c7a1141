#pragma once

#include <vector>

#include "hyperred/pfq/spec.hpp"
#include "hyperred/pfq/theta_operator.hpp"

namespace hyperred {

// P_j of the roots: coefficient of x^(n-j) in prod (x + r). DomainError
// when j is outside 0..n.
RationalFunction elementary_symmetric(const std::vector<RationalFunction>& roots, std::size_t j);
// All of P_0..P_n at once.
std::vector<RationalFunction> elementary_symmetric_all(const std::vector<RationalFunction>& roots);

// A unit step: applying `op` to the source function gives `target`.
struct Step {
  ThetaOperator1D op;
  PFQSpec target;
};

// upper[i] -> upper[i] + 1. SingularOperator when upper[i] is zero.
Step step_up_upper(const PFQSpec& f, std::size_t i);
// lower[i] -> lower[i] - 1. SingularOperator when lower[i] is one.
Step step_down_lower(const PFQSpec& f, std::size_t i);
// upper[i] -> upper[i] - 1. ExceptionalParameter when the prefactor vanishes.
Step step_down_upper(const PFQSpec& f, std::size_t i);
// lower[i] -> lower[i] + 1. ExceptionalParameter when the prefactor vanishes.
Step step_up_lower(const PFQSpec& f, std::size_t i);

// Image of theta^(p+1) from the differential equation of f.
ThetaOperator1D ode_eliminate(const PFQSpec& f);

// Reduces theta powers above p with the differential equation of f.
ThetaOperator1D normalize_theta(const ThetaOperator1D& op, const PFQSpec& f);

// outer o inner, normalized against f.
ThetaOperator1D compose(const ThetaOperator1D& outer, const ThetaOperator1D& inner, const PFQSpec& f);

// Rewrites theta powers acting on a fixed function. In the generic mode
// theta^(p+1) comes from the differential equation; in the unit mode f has an
// upper parameter equal to 1 and theta^p comes from the unit relation, which
// also contributes a rational remainder.
class ThetaReducer {
 public:
  struct Image {
    ThetaOperator1D op;
    RationalFunction remainder;
  };

  ThetaReducer(const PFQSpec& f, bool unit_relation);

  Image reduce(const ThetaOperator1D& op);
  unsigned cap() const noexcept { return cap_; }

 private:
  const Image& power_image(unsigned k);

  Symbol z_;
  unsigned cap_;
  std::vector<Image> images_;
};

}  // namespace hyperred
