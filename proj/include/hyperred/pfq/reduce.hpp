#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperred/pfq/operators.hpp"

namespace hyperred {

// target = factor * (op applied to base) + inhomogeneous.
struct ReductionResult1D {
  ThetaOperator1D op;
  PFQSpec base;
  RationalFunction factor{1};
  RationalFunction inhomogeneous;
  // p+1 on the generic path, p when the unit relation capped the powers.
  unsigned basis_dimension = 1;
  std::vector<std::string> notes;

  // Coefficients of theta^0 .. theta^(basis_dimension-1).
  std::vector<RationalFunction> dense_coefficients() const;
};

ReductionResult1D reduce(const PFQSpec& target);

// theta^p = op + inhomogeneous on a function with an upper parameter equal
// to 1. DomainError when no upper parameter is exactly 1.
struct UnitRelation {
  ThetaOperator1D op;
  RationalFunction inhomogeneous;
};
UnitRelation unit_upper_identity(const PFQSpec& f);

struct WeightedSpec {
  RationalFunction weight;
  PFQSpec spec;
};

// Finite expansion of a function whose upper parameter exceeds a lower one
// by a nonnegative integer. DomainError when there is no such pair.
std::vector<WeightedSpec> karlsson_reduce(const PFQSpec& f);

// target = prefactor * op(base) where target has every parameter of base
// raised by m and op is (d/dz)^m written in theta.
struct AllShiftDerivative {
  RationalFunction prefactor;
  unsigned order = 0;
  ThetaOperator1D op;
  PFQSpec base;
  PFQSpec target;
};
AllShiftDerivative all_shift_derivative(const PFQSpec& base, unsigned m);

// pFq(1, a; 2, b; z) = prod(b-1)/(z prod(a-1)) [p-1Fq-1(a-1; b-1; z) - 1],
// with the smaller function reduced in turn. NotApplicable otherwise.
ReductionResult1D special_contiguous(const PFQSpec& f);

// sum of op_i applied to spec_i.
struct ContiguousRelation {
  std::vector<std::pair<ThetaOperator1D, PFQSpec>> terms;
};
// theta^k on a function with a pair A over 1+A, in terms of the function and
// the function with that pair removed.
ContiguousRelation paired_theta_power(const PFQSpec& f, unsigned k);
// (theta/A)^q on a function with r >= q identical pairs A over 1+A.
ContiguousRelation paired_binomial(const PFQSpec& f, unsigned q);

struct ExplicitForm {
  std::vector<WeightedSpec> terms;
  RationalFunction inhomogeneous;
};
// Replaces theta^k by derivatives and derivatives by shifted functions.
ExplicitForm explicit_form(const ReductionResult1D& result);

RationalFunction pochhammer(const RationalFunction& x, unsigned n);

}  // namespace hyperred
