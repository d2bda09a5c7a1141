#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hyperred/errors.hpp"
#include "hyperred/pfq/operators.hpp"
#include "hyperred/series/oracle.hpp"

using namespace hyperred;
using fixtures::rf;
using fixtures::same;

namespace {

const Bindings kValues = {{"a1", Rational(1, 3)}, {"a2", Rational(1, 5)}, {"a3", Rational(1, 7)},
                          {"a4", Rational(2, 11)}, {"b1", Rational(9, 4)}, {"b2", Rational(11, 6)},
                          {"b3", Rational(13, 10)}, {"c", Rational(3, 8)}};

// op applied to f at z, parameters bound by kValues.
Float apply_at(const PFQSpec& f, const ThetaOperator1D& op, const Rational& z, unsigned N = 160) {
  PrecisionScope scope(50);
  const auto series =
      pfq_coefficients<Float>(evaluate_params(f.upper, kValues), evaluate_params(f.lower, kValues), N);
  return apply_theta_series(series, op, f.argument, z, kValues).value;
}

Float value_at(const PFQSpec& f, const Rational& z) { return apply_at(f, ThetaOperator1D::identity(), z); }

double rel(const Float& a, const Float& b) {
  PrecisionScope scope(50);
  Float d = abs(a - b) / std::max<Float>(abs(b), Float(1e-30));
  return d.convert_to<double>();
}

ThetaOperator1D theta_power(unsigned k) { return ThetaOperator1D::monomial(k); }

ThetaOperator1D round_trip(const PFQSpec& f, const Step& there, const Step& back) {
  return compose(back.op, there.op, f);
}

}  // namespace

TEST(PfqSpec, ValidatesArity) {
  EXPECT_NO_THROW(make_pfq("a,b", "c").validate());
  EXPECT_THROW(make_pfq("a,b", "c,d").validate(), DomainError);
  EXPECT_EQ(make_pfq("a", "").p(), 0u);
}

TEST(PfqSpec, RejectsPoleLower) { EXPECT_THROW(reduce(make_pfq("a,b", "-2")), DomainError); }

TEST(PfqSpec, TerminatingUpperIsExceptional) {
  try {
    reduce(make_pfq("-3,b", "c"));
    FAIL() << "expected ExceptionalParameter";
  } catch (const ExceptionalParameter& e) {
    EXPECT_FALSE(e.violations().empty());
  }
}

TEST(ElementarySymmetric, ThreeRoots) {
  const std::vector<RationalFunction> roots{rf("a"), rf("b"), rf("c")};
  EXPECT_TRUE(same(elementary_symmetric(roots, 0), "1"));
  EXPECT_TRUE(same(elementary_symmetric(roots, 1), "a+b+c"));
  EXPECT_TRUE(same(elementary_symmetric(roots, 2), "a*b+a*c+b*c"));
  EXPECT_TRUE(same(elementary_symmetric(roots, 3), "a*b*c"));
  EXPECT_THROW(elementary_symmetric(roots, 4), DomainError);
  EXPECT_EQ(elementary_symmetric_all(roots).size(), 4u);
}

TEST(StepOperators, UpUpperIsThetaPlusA) {
  const PFQSpec f = make_pfq("a1,a2", "b1");
  const Step s = step_up_upper(f, 0);
  EXPECT_TRUE(fixtures::same_params(s.target.upper, "a1+1,a2"));
  EXPECT_TRUE(same(s.op.coefficient(0), "1"));
  EXPECT_TRUE(same(s.op.coefficient(1), "1/a1"));
}

TEST(StepOperators, DownLowerIsThetaPlusBMinusOne) {
  const PFQSpec f = make_pfq("a1,a2", "b1");
  const Step s = step_down_lower(f, 0);
  EXPECT_TRUE(fixtures::same_params(s.target.lower, "b1-1"));
  EXPECT_TRUE(same(s.op.coefficient(0), "1"));
  EXPECT_TRUE(same(s.op.coefficient(1), "1/(b1-1)"));
}

TEST(StepOperators, SingularPrefactors) {
  EXPECT_THROW(step_up_upper(make_pfq("0,a", "b"), 0), SingularOperator);
  EXPECT_THROW(step_down_lower(make_pfq("a,b", "1"), 0), SingularOperator);
}

TEST(StepOperators, NumericallyCorrect) {
  const PFQSpec f = make_pfq("a1,a2,a3", "b1,b2");
  const Rational z(1, 9);
  for (std::size_t i = 0; i < 3; ++i) {
    for (const Step& s : {step_up_upper(f, i), step_down_upper(f, i)}) {
      EXPECT_LT(rel(apply_at(f, s.op, z), value_at(s.target, z)), 1e-40) << s.target.to_string();
    }
  }
  for (std::size_t i = 0; i < 2; ++i) {
    for (const Step& s : {step_down_lower(f, i), step_up_lower(f, i)}) {
      EXPECT_LT(rel(apply_at(f, s.op, z), value_at(s.target, z)), 1e-40) << s.target.to_string();
    }
  }
}

TEST(OdeEliminate, AnnihilatesSeriesExactly) {
  for (const auto& [upper, lower] : std::vector<std::pair<std::string, std::string>>{
           {"a1", ""}, {"a1,a2", "b1"}, {"a1,a2,a3", "b1,b2"}, {"a1,a2,a3,a4", "b1,b2,b3"}}) {
    const PFQSpec f = make_pfq(upper, lower);
    const ThetaOperator1D op = theta_power(static_cast<unsigned>(f.p() + 1)) - ode_eliminate(f);
    const auto series =
        pfq_coefficients<Rational>(evaluate_params(f.upper, kValues), evaluate_params(f.lower, kValues), 30);
    for (const Rational& r : residual_1d(op, f.argument, kValues, series)) EXPECT_EQ(r, Rational(0)) << f.to_string();
  }
}

TEST(NormalizeTheta, LeavesLowPowersAlone) {
  const PFQSpec f = make_pfq("a1,a2", "b1");
  const ThetaOperator1D op = theta_power(1).scaled(rf("z+a1"));
  EXPECT_EQ(normalize_theta(op, f), op);
  EXPECT_LE(normalize_theta(theta_power(5), f).max_power(), 1);
}

TEST(Reduce, MixedThreeF2) {
  const auto c = fixtures::three_f2_mixed();
  EXPECT_TRUE(fixtures::matches(c, reduce(fixtures::spec_of(c))));
}

TEST(Reduce, MixedFourF3) {
  const auto c = fixtures::four_f3_mixed();
  EXPECT_TRUE(fixtures::matches(c, reduce(fixtures::spec_of(c))));
}

TEST(Reduce, UnitUpperHasInhomogeneousTerm) {
  const auto c = fixtures::unit_upper();
  const auto r = reduce(fixtures::spec_of(c));
  EXPECT_TRUE(fixtures::matches(c, r));
  EXPECT_EQ(r.basis_dimension, 2u);
}

TEST(Reduce, KarlssonCollapse) {
  const auto c = fixtures::karlsson();
  EXPECT_TRUE(fixtures::matches(c, reduce(fixtures::spec_of(c))));
}

TEST(Reduce, CanonicalTargetIsIdentity) {
  const PFQSpec f = make_pfq("a1,a2", "b1+1");
  const auto r = reduce(f);
  EXPECT_EQ(r.base, f);
  EXPECT_TRUE(same(r.dense_coefficients()[0], "1"));
  EXPECT_TRUE(r.dense_coefficients()[1].is_zero());
}

TEST(Reduce, ResultVerifiesNumerically) {
  for (const auto& c : {fixtures::three_f2_mixed(), fixtures::four_f3_mixed(), fixtures::unit_upper(),
                        fixtures::karlsson()}) {
    const PFQSpec f = fixtures::spec_of(c);
    const auto report = verify_reduction(f, reduce(f), Rational(1, 10), kValues, 120, 1e-12);
    EXPECT_TRUE(report.passed) << c.upper << " rel " << report.relative_error;
  }
}

TEST(UnitRelation, HoldsOnSeries) {
  const PFQSpec f = make_pfq("1,a2,a3", "b1,b2");
  const UnitRelation u = unit_upper_identity(f);
  const Rational z(1, 6);
  Bindings at = kValues;
  at["z"] = z;
  PrecisionScope scope(50);
  const Float lhs = apply_at(f, theta_power(2) - u.op, z);
  const Float rhs = to_float(u.inhomogeneous.evaluate(at));
  EXPECT_LT(rel(lhs, rhs), 1e-40);
  EXPECT_THROW(unit_upper_identity(make_pfq("a1,a2", "b1")), DomainError);
}

TEST(KarlssonReduce, FiniteSumMatches) {
  const PFQSpec f = make_pfq("b1+2,a2,a3", "b1,b2");
  const auto terms = karlsson_reduce(f);
  EXPECT_EQ(terms.size(), 3u);
  const Rational z(1, 7);
  Bindings at = kValues;
  at["z"] = z;
  PrecisionScope scope(50);
  Float sum = 0;
  for (const auto& t : terms) sum += to_float(t.weight.evaluate(at)) * value_at(t.spec, z);
  EXPECT_LT(rel(sum, value_at(f, z)), 1e-40);
  EXPECT_THROW(karlsson_reduce(make_pfq("a1,a2", "b1")), DomainError);
}

TEST(AllShiftDerivative, RaisesEveryParameter) {
  const PFQSpec base = make_pfq("a1,a2,a3", "b1,b2");
  for (unsigned m : {1u, 2u, 3u}) {
    const auto d = all_shift_derivative(base, m);
    EXPECT_EQ(d.order, m);
    EXPECT_TRUE(fixtures::same_params(d.target.upper, "a1+" + std::to_string(m) + ",a2+" + std::to_string(m) +
                                                          ",a3+" + std::to_string(m)));
    ReductionResult1D as_result;
    as_result.op = d.op;
    as_result.base = d.base;
    as_result.factor = d.prefactor;
    EXPECT_TRUE(verify_reduction(d.target, as_result, Rational(1, 10), kValues).passed) << m;
  }
}

TEST(SpecialContiguous, UnitOverTwo) {
  const PFQSpec f = make_pfq("1,a2,a3", "2,b2");
  const auto r = special_contiguous(f);
  EXPECT_TRUE(verify_reduction(f, r, Rational(1, 10), kValues).passed);
  EXPECT_THROW(special_contiguous(make_pfq("a1,a2", "b1")), NotApplicable);
}

TEST(PairedRelations, ThetaPowerAndBinomial) {
  const PFQSpec f = make_pfq("a1,c,c", "c+1,c+1");
  const Rational z(1, 8);
  PrecisionScope scope(50);
  const Float c = to_float(kValues.at("c"));
  for (unsigned k : {1u, 2u, 3u}) {
    Float sum = 0;
    for (const auto& [op, spec] : paired_theta_power(f, k).terms) sum += apply_at(spec, op, z);
    EXPECT_LT(rel(sum, apply_at(f, theta_power(k), z)), 1e-40) << k;
  }
  // (theta/c)^2 f
  Float sum = 0;
  for (const auto& [op, spec] : paired_binomial(f, 2).terms) sum += apply_at(spec, op, z);
  EXPECT_LT(rel(sum, apply_at(f, theta_power(2), z) / (c * c)), 1e-40);
  EXPECT_THROW(paired_binomial(make_pfq("a1,c", "c+1"), 2), NotApplicable);
}

TEST(ExplicitForm, TwoF1Expansion) {
  const PFQSpec f = make_pfq("1+a1,1+a2", "1+b1", "x");
  const ExplicitForm form = explicit_form(reduce(f));
  EXPECT_TRUE(form.inhomogeneous.is_zero());
  int matched = 0;
  for (const auto& t : form.terms) {
    if (fixtures::same_params(t.spec.upper, "a1,a2") && fixtures::same_params(t.spec.lower, "b1+1")) {
      EXPECT_TRUE(same(t.weight, "1/(1-x)"));
      ++matched;
    } else if (fixtures::same_params(t.spec.upper, "a1+1,a2+1") && fixtures::same_params(t.spec.lower, "b1+2")) {
      EXPECT_TRUE(same(t.weight, "a1*a2*x*(a1+a2-b1)/((b1+1)*(a1*a2-a1*a2*x))"));
      ++matched;
    } else {
      EXPECT_TRUE(t.weight.is_zero()) << t.spec.to_string();
    }
  }
  EXPECT_EQ(matched, 2);
}

TEST(Pochhammer, Values) {
  EXPECT_TRUE(same(pochhammer(rf("a"), 0), "1"));
  EXPECT_TRUE(same(pochhammer(rf("a"), 3), "a*(a+1)*(a+2)"));
}

// Every step and its inverse compose to the identity on the source function.
TEST(RoundTrip, StepPairsAreIdentity) {
  for (const auto& [upper, lower] : std::vector<std::pair<std::string, std::string>>{
           {"a1", ""}, {"a1,a2", "b1"}, {"a1,a2,a3", "b1,b2"}, {"a1,a2,a3,a4", "b1,b2,b3"}}) {
    const PFQSpec f = make_pfq(upper, lower);
    for (std::size_t i = 0; i < f.upper.size(); ++i) {
      const Step up = step_up_upper(f, i);
      EXPECT_EQ(round_trip(f, up, step_down_upper(up.target, i)), ThetaOperator1D::identity()) << f.to_string();
      const Step down = step_down_upper(f, i);
      EXPECT_EQ(round_trip(f, down, step_up_upper(down.target, i)), ThetaOperator1D::identity()) << f.to_string();
    }
    for (std::size_t i = 0; i < f.lower.size(); ++i) {
      const Step down = step_down_lower(f, i);
      EXPECT_EQ(round_trip(f, down, step_up_lower(down.target, i)), ThetaOperator1D::identity()) << f.to_string();
      const Step up = step_up_lower(f, i);
      EXPECT_EQ(round_trip(f, up, step_down_lower(up.target, i)), ThetaOperator1D::identity()) << f.to_string();
    }
  }
}

// Random numeric instances: the reduction agrees with the series.
TEST(Property, RandomReductionsVerify) {
  std::mt19937_64 rng(20261016);
  auto frac = [&] {
    const long den = std::uniform_int_distribution<long>(5, 37)(rng);
    Rational q(std::uniform_int_distribution<long>(1, den - 1)(rng), den);
    q.canonicalize();
    return q;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned p = trial % 4;
    PFQSpec t;
    for (unsigned i = 0; i <= p; ++i) t.upper.emplace_back(ParameterExpr::LinearPart{}, frac(), std::uniform_int_distribution<long>(-3, 3)(rng));
    for (unsigned i = 0; i < p; ++i) t.lower.emplace_back(ParameterExpr::LinearPart{}, frac(), 1 + std::uniform_int_distribution<long>(-3, 3)(rng));
    const auto r = reduce(t);
    EXPECT_LE(r.op.max_power(), static_cast<int>(p));
    const auto report = verify_reduction(t, r, Rational(1, 7), {}, 120, 1e-11);
    EXPECT_TRUE(report.passed) << t.to_string() << " rel " << report.relative_error;
  }
}
