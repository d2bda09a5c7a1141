#pragma once

#include <string>
#include <vector>

#include "hyperred/appell/reduce.hpp"
#include "hyperred/pfq/reduce.hpp"
#include "hyperred/symcore/parse.hpp"

namespace fixtures {

using namespace hyperred;

inline RationalFunction rf(const std::string& text) {
  return parse_expression(text, {"x", "y", "z", "z1", "z2"});
}

// Equality after cross-multiplication.
inline bool same(const RationalFunction& lhs, const RationalFunction& rhs) { return (lhs - rhs).is_zero(); }
inline bool same(const RationalFunction& lhs, const std::string& rhs) { return same(lhs, rf(rhs)); }

inline bool same_params(const std::vector<ParameterExpr>& lhs, const std::string& rhs) {
  const auto expected = parse_parameter_list(rhs);
  if (lhs.size() != expected.size()) return false;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (!(lhs[i].polynomial() - expected[i].polynomial()).is_zero()) return false;
  }
  return true;
}

struct PfqCase {
  std::string upper, lower;
  std::string base_upper, base_lower;
  std::vector<std::string> coefficients;  // theta^0, theta^1, ...
  std::string inhomogeneous = "0";
};

// Two-slot raise of 3F2 on both sides.
inline PfqCase three_f2_mixed() {
  return {"1+a1,2+a2,a3",
          "1+b1,2+b2",
          "a1,a2,a3",
          "1+b1,1+b2",
          {"-(a2-a3+1)*(b2+1)/((a2+1)*(a3-b2-1))",
           "-(b2+1)*(x*a2^2-(a3*x-x+b1)*a2+x*a1*(a2-a3+1)+b1*b2)/(x*a1*a2*(a2+1)*(a3-b2-1))",
           "-(b2+1)*(-a3*x+x+(x-1)*a2+b2)/(x*a1*a2*(a2+1)*(a3-b2-1))"}};
}

inline PfqCase four_f3_mixed() {
  return {"1+a1,1+a2,a3,a4",
          "1+b1,1+b2,b3",
          "a1,a2,a3,a4",
          "b1+1,b2+1,b3+1",
          {"1", "1/a2+1/b3+1/a1", "(a1+a2+b3)/(a1*a2*b3)", "1/(a1*a2*b3)"}};
}

inline PfqCase unit_upper() {
  return {"3,1+a2,1+a3",
          "2+b1,2+b2",
          "1,a2+1,a3+1",
          "b1+2,b2+2",
          {"((b1+1)*(b2+1)-x*(a2+1)*(a3+1))/(2*(x-1))+1", "(1/2)*((-x*(a2+a3+2)+b1+b2+2)/(x-1)+3)"},
          "-(b1+1)*(b2+1)/(2*(x-1))"};
}

inline PfqCase karlsson() {
  return {"3+b1,1+a2,1+a3",
          "2+b1,2+b2",
          "a2,a3",
          "b2+1",
          {"-(b2+1)/((x-1)*(b1+2))", "-(a2*x+a3*x-b1*x-x+b1-b2+1)*(b2+1)/((x-1)*x*a2*a3*(b1+2))"}};
}

inline PFQSpec spec_of(const PfqCase& c) { return make_pfq(c.upper, c.lower, "x"); }

// Whether the reduction of `c` reproduces base, coefficients and remainder.
inline bool matches(const PfqCase& c, const ReductionResult1D& r) {
  if (!same_params(r.base.upper, c.base_upper) || !same_params(r.base.lower, c.base_lower)) return false;
  const auto dense = r.dense_coefficients();
  if (dense.size() != c.coefficients.size()) return false;
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (!same(r.factor * dense[k], c.coefficients[k])) return false;
  }
  return same(r.inhomogeneous, c.inhomogeneous);
}

inline AppellSpec f1_target() { return make_appell(AppellKind::F1, "a,b1,b2,c", "z1", "z2"); }
inline const std::vector<long> kF1Shift{1, -1, 0, 0};

inline bool f1_matches(const ReductionResult2D& r) {
  return same_params(r.base.params, "a+1,b1-1,b2,c") && r.op.max_x() <= 1 && r.op.max_y() <= 1 &&
         r.op.coefficient(1, 1).is_zero() &&
         same(r.op.coefficient(0, 0), "(-a*z1+a+b1*z1+b2*z2-c-z1+1)/(a-c+1)") &&
         same(r.op.coefficient(1, 0), "-(z1-1)*(a-b1+1)/((b1-1)*(a-c+1))") &&
         same(r.op.coefficient(0, 1), "(z2-1)/(a-c+1)");
}

inline AppellSpec f2_target() { return make_appell(AppellKind::F2, "a,b1,b2,c1,c2", "z1", "z2"); }
inline const std::vector<long> kF2Shift{0, 0, 1, 1, 0};

inline bool f2_matches(const ReductionResult2D& r) {
  return same_params(r.base.params, "a,b1,b2+1,c1+1,c2") &&
         same(r.op.coefficient(0, 0), "a*z2*(c1*(z1-1)-b1*z1)/(c1*(z1-1)*(b2-c2+1))+1") &&
         same(r.op.coefficient(1, 0), "(1-z2*(a+z1*(b1-c1))/((z1-1)*(b2-c2+1)))/c1") &&
         same(r.op.coefficient(0, 1), "(c1*(z1-1)*(z2-1)-b1*z1*z2)/(c1*(z1-1)*(b2-c2+1))") &&
         same(r.op.coefficient(1, 1), "-(z1+z2-1)/(c1*(z1-1)*(b2-c2+1))");
}

}  // namespace fixtures
