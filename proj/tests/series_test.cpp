#include <gtest/gtest.h>

#include <cstdlib>

#include "fixtures.hpp"
#include "hyperred/errors.hpp"
#include "hyperred/pfq/operators.hpp"
#include "hyperred/series/oracle.hpp"

using namespace hyperred;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

double relative(const Float& a, const Float& b) {
  return (abs(a - b) / std::max<Float>(abs(b), Float(1e-30))).convert_to<double>();
}

// From scratch: prod (a)_k / prod (b)_k / k!.
Rational coefficient_from_scratch(const std::vector<Rational>& upper, const std::vector<Rational>& lower, unsigned k) {
  Rational c = 1;
  for (unsigned j = 0; j < k; ++j) {
    for (const auto& a : upper) c *= a + j;
    for (const auto& b : lower) c /= b + j;
    c /= j + 1;
  }
  return c;
}

}  // namespace

TEST(SeriesPfq, GeometricClosedForm) {
  PrecisionScope scope(50);
  const auto v = series_pfq({q(1), q(2, 7)}, {q(2, 7)}, q(1, 4), 200);
  EXPECT_LT(relative(v.value, Float(4) / 3), 1e-45);
}

TEST(SeriesPfq, ExponentialClosedForm) {
  PrecisionScope scope(50);
  const auto v = series_pfq({}, {}, q(1, 2), 80);
  EXPECT_LT(relative(v.value, exp(Float(1) / 2)), 1e-45);
}

TEST(SeriesPfq, OneF0IsBinomial) {
  PrecisionScope scope(50);
  for (const Rational& a : {q(1, 2), q(-1, 3)}) {
    for (const Rational& z : {q(1, 5), q(-1, 5)}) {
      const auto v = series_pfq({a}, {}, z, 120);
      const Float expected = pow(1 - to_float(z), -to_float(a));
      EXPECT_LT(relative(v.value, expected), 1e-13) << a << " " << z;
    }
  }
}

// Frozen values from an independent 60-digit summation.
TEST(SeriesPfq, FrozenTwoF1) {
  PrecisionScope scope(50);
  const auto v = series_pfq({q(1, 3), q(1, 7)}, {q(9, 5)}, q(1, 5), 120);
  EXPECT_LT(relative(v.value, Float("1.00560736078022458133549516274781600675107800176725950915665")), 1e-45);
}

TEST(SeriesPfq, FrozenThreeF2) {
  PrecisionScope scope(50);
  const auto v = series_pfq({q(1, 3), q(1, 5), q(1, 7)}, {q(9, 4), q(11, 6)}, q(1, 10), 120);
  EXPECT_LT(relative(v.value, Float("1.00023322598779739754543059773136795000325379473849090493345")), 1e-45);
}

TEST(SeriesPfq, ExactAndFloatAgree) {
  PrecisionScope scope(50);
  const auto exact = series_pfq_exact({q(1, 3), q(1, 7)}, {q(9, 5)}, q(1, 5), 40);
  const auto fl = series_pfq({q(1, 3), q(1, 7)}, {q(9, 5)}, q(1, 5), 40);
  EXPECT_LT(relative(fl.value, to_float(exact.value)), 1e-45);
}

TEST(SeriesPfq, LongerTruncationWithinEstimate) {
  PrecisionScope scope(50);
  for (const Rational& z : {q(3, 10), q(-3, 10), q(1, 7)}) {
    const auto shorter = series_pfq({q(1, 3), q(5, 2), q(1, 7)}, {q(9, 4), q(11, 6)}, z, 60);
    const auto longer = series_pfq({q(1, 3), q(5, 2), q(1, 7)}, {q(9, 4), q(11, 6)}, z, 80);
    EXPECT_LE(abs(longer.value - shorter.value), shorter.last_term) << z;
  }
}

TEST(SeriesPfq, RecurrenceMatchesScratch) {
  const std::vector<Rational> upper{q(1, 3), q(-5, 2), q(7, 4)};
  const std::vector<Rational> lower{q(9, 5), q(-7, 3)};
  const unsigned N = 60;
  const auto s = pfq_coefficients<Rational>(upper, lower, N);
  ASSERT_EQ(s.order(), N);
  for (unsigned k : {0u, 1u, 17u, N}) EXPECT_EQ(s.coefficients[k], coefficient_from_scratch(upper, lower, k)) << k;
}

TEST(SeriesPfq, Guards) {
  EXPECT_THROW(pfq_coefficients<Rational>({q(1, 3), q(1, 2)}, {q(-2)}, 10), PoleError);
  EXPECT_NO_THROW(pfq_coefficients<Rational>({q(1, 3), q(1, 2)}, {q(-20)}, 10));
  EXPECT_THROW(series_pfq({q(1, 3), q(1, 2)}, {q(1, 5)}, q(1), 10), ConvergenceError);
  EXPECT_THROW(check_pfq_point(q(-3, 2)), ConvergenceError);
}

TEST(SeriesAppell, OriginIsOne) {
  PrecisionScope scope(50);
  const std::vector<std::vector<Rational>> params{
      {q(1, 3), q(1, 5), q(1, 7), q(9, 4)},
      {q(1, 3), q(1, 5), q(1, 7), q(9, 4), q(11, 6)},
      {q(1, 3), q(2, 9), q(1, 5), q(1, 7), q(9, 4)},
      {q(1, 3), q(1, 5), q(9, 4), q(11, 6)}};
  const AppellKind kinds[] = {AppellKind::F1, AppellKind::F2, AppellKind::F3, AppellKind::F4};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(series_appell(kinds[i], params[i], q(0), q(0), 20).value, Float(1)) << kind_name(kinds[i]);
  }
}

TEST(SeriesAppell, F2OnAxisIsTwoF1) {
  PrecisionScope scope(50);
  const auto f2 = series_appell(AppellKind::F2, {q(1, 3), q(1, 5), q(1, 7), q(9, 4), q(11, 6)}, q(1, 4), q(0), 120);
  const auto f21 = series_pfq({q(1, 3), q(1, 5)}, {q(9, 4)}, q(1, 4), 120);
  EXPECT_LT(relative(f2.value, f21.value), 1e-45);
}

TEST(SeriesAppell, FrozenF1) {
  PrecisionScope scope(50);
  const auto v = series_appell(AppellKind::F1, {q(1, 3), q(1, 5), q(1, 7), q(9, 4)}, q(1, 10), q(1, 8), 80);
  EXPECT_LT(relative(v.value, Float("1.00578947101821471801341307066707719731558239077230278964029")), 1e-45);
}

TEST(SeriesAppell, FrozenF4) {
  PrecisionScope scope(50);
  const auto v = series_appell(AppellKind::F4, {q(1, 2), q(1, 3), q(5, 4), q(7, 4)}, q(1, 25), q(1, 36), 80);
  EXPECT_LT(relative(v.value, Float("1.00828735692372817553919703649498432493023093775731049464139")), 1e-45);
}

TEST(SeriesAppell, Guards) {
  EXPECT_THROW(check_appell_point(AppellKind::F1, q(1), q(0)), ConvergenceError);
  EXPECT_NO_THROW(check_appell_point(AppellKind::F1, q(9, 10), q(9, 10)));
  EXPECT_THROW(check_appell_point(AppellKind::F2, q(1, 2), q(1, 2)), ConvergenceError);
  EXPECT_NO_THROW(check_appell_point(AppellKind::F2, q(1, 2), q(2, 5)));
  EXPECT_THROW(check_appell_point(AppellKind::F3, q(0), q(-1)), ConvergenceError);
  EXPECT_THROW(check_appell_point(AppellKind::F4, q(1, 4), q(1, 4)), ConvergenceError);
  EXPECT_NO_THROW(check_appell_point(AppellKind::F4, q(1, 5), q(1, 5)));
  EXPECT_THROW(appell_coefficients<Rational>(AppellKind::F2, {q(1, 3), q(1, 5), q(1, 7), q(-1), q(1, 2)}, 5),
               PoleError);
  EXPECT_THROW(appell_coefficients<Rational>(AppellKind::F1, {q(1, 3), q(1, 5), q(1, 7)}, 5), DomainError);
}

TEST(ApplyTheta, IdentityAndGeometric) {
  PrecisionScope scope(50);
  const Symbol z = Symbol::argument("z");
  const auto s = pfq_coefficients<Float>({q(1), q(1, 2)}, {q(1, 2)}, 200);
  const Float plain = theta_sum(s, to_float(q(1, 3))).value;
  EXPECT_EQ(apply_theta_series(s, ThetaOperator1D::identity(), z, q(1, 3), {}).value, plain);
  const Float theta = apply_theta_series(s, ThetaOperator1D::monomial(1), z, q(1, 3), {}).value;
  EXPECT_LT(relative(theta, Float(3) / 4), 1e-45);
}

TEST(ApplyTheta, CoefficientPole) {
  PrecisionScope scope(50);
  const Symbol z = Symbol::argument("z");
  const auto s = pfq_coefficients<Float>({q(1), q(1, 2)}, {q(1, 2)}, 20);
  const ThetaOperator1D op = ThetaOperator1D::identity().scaled(fixtures::rf("1/(10*z-1)"));
  EXPECT_THROW(apply_theta_series(s, op, z, q(1, 10), {}), PoleError);
}

TEST(ApplyTheta, MixedThetaMatchesFiniteDifference) {
  PrecisionScope scope(50);
  const std::vector<Rational> params{q(1, 3), q(1, 5), q(1, 7), q(9, 4), q(11, 6)};
  const Rational x(1, 10), y(1, 8), h(1, 1000000);
  const auto f = [&](const Rational& px, const Rational& py) {
    return series_appell(AppellKind::F2, params, px, py, 120).value;
  };
  const Float fd = (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) /
                   (4 * to_float(h) * to_float(h)) * to_float(x) * to_float(y);
  const auto s = appell_coefficients<Float>(AppellKind::F2, params, 120);
  const Float mixed =
      apply_theta_series(s, ThetaOperator2D::monomial(1, 1), Symbol::argument("x"), Symbol::argument("y"), x, y, {})
          .value;
  EXPECT_LT(relative(mixed, fd), 1e-6);
}

TEST(ApplyTheta, ThetaXMatchesFiniteDifference) {
  PrecisionScope scope(50);
  const std::vector<Rational> params{q(1, 2), q(1, 3), q(5, 4), q(7, 4)};
  const Rational x(1, 25), y(1, 36), h(1, 1000000);
  const Float fd = (series_appell(AppellKind::F4, params, x + h, y, 80).value -
                    series_appell(AppellKind::F4, params, x - h, y, 80).value) /
                   (2 * to_float(h)) * to_float(x);
  const auto s = appell_coefficients<Float>(AppellKind::F4, params, 80);
  const Float tx =
      apply_theta_series(s, ThetaOperator2D::monomial(1, 0), Symbol::argument("x"), Symbol::argument("y"), x, y, {})
          .value;
  EXPECT_LT(relative(tx, fd), 1e-6);
}

TEST(Verify, FixturePasses) {
  const PFQSpec f = fixtures::spec_of(fixtures::three_f2_mixed());
  const Bindings b{{"a1", q(1, 3)}, {"a2", q(1, 5)}, {"a3", q(1, 7)}, {"b1", q(9, 4)}, {"b2", q(11, 6)}};
  const auto report = verify_reduction(f, reduce(f), q(1, 10), b, 120, 1e-12);
  EXPECT_TRUE(report.passed);
  EXPECT_LT(report.relative_error.convert_to<double>(), 1e-40);
  EXPECT_LT(report.truncation_estimate.convert_to<double>(), 1e-13);
}

TEST(Verify, IdentityIsExact) {
  const PFQSpec f = make_pfq("a1,a2", "b1");
  ReductionResult1D identity;
  identity.op = ThetaOperator1D::identity();
  identity.base = f;
  const auto report = verify_reduction(f, identity, q(1, 10), {{"a1", q(1, 3)}, {"a2", q(1, 5)}, {"b1", q(9, 4)}});
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.relative_error, 0);
}

TEST(Verify, CorruptedCoefficientFails) {
  const PFQSpec f = fixtures::spec_of(fixtures::four_f3_mixed());
  auto r = reduce(f);
  r.op.add_term(0, RationalFunction(Rational(1, 1000)));
  const Bindings b{{"a1", q(1, 3)}, {"a2", q(1, 5)}, {"a3", q(1, 7)}, {"a4", q(2, 11)},
                   {"b1", q(9, 4)}, {"b2", q(11, 6)}, {"b3", q(13, 10)}};
  const auto report = verify_reduction(f, r, q(1, 10), b);
  EXPECT_FALSE(report.passed);
  EXPECT_GT(report.relative_error.convert_to<double>(), 1e-4);
  EXPECT_LT(report.relative_error.convert_to<double>(), 1e-2);
}

TEST(Verify, AppellCorruptionFails) {
  const AppellSpec t = fixtures::f1_target();
  auto r = reduce2d(t, fixtures::kF1Shift);
  const Bindings b{{"a", q(1, 3)}, {"b1", q(1, 5)}, {"b2", q(1, 7)}, {"c", q(9, 4)}};
  EXPECT_TRUE(verify_reduction(t, r, q(1, 10), q(1, 8), b).passed);
  r.op.add_term(0, 0, RationalFunction(Rational(1, 1000)));
  EXPECT_FALSE(verify_reduction(t, r, q(1, 10), q(1, 8), b).passed);
}

TEST(Verify, PropagatesGuards) {
  const PFQSpec f = make_pfq("a1,a2", "b1");
  const Bindings b{{"a1", q(1, 3)}, {"a2", q(1, 5)}, {"b1", q(9, 4)}};
  EXPECT_THROW(verify_reduction(f, reduce(f), q(2), b), ConvergenceError);
  EXPECT_THROW(verify_reduction(f, reduce(f), q(1, 10), {{"a1", q(1, 3)}, {"a2", q(1, 5)}, {"b1", q(-1)}}),
               PoleError);
}

TEST(Residual, OdeVanishesWrongOperatorDoesNot) {
  const PFQSpec f = make_pfq("a1,a2", "b1");
  const Bindings b{{"a1", q(1, 3)}, {"a2", q(1, 5)}, {"b1", q(9, 4)}};
  const auto series = pfq_coefficients<Rational>(evaluate_params(f.upper, b), evaluate_params(f.lower, b), 30);
  const ThetaOperator1D good = ThetaOperator1D::monomial(2) - ode_eliminate(f);
  for (const auto& r : residual_1d(good, f.argument, b, series)) EXPECT_EQ(r, 0);
  const ThetaOperator1D bad = good + ThetaOperator1D::monomial(1, RationalFunction(Rational(1, 7)));
  bool nonzero = false;
  for (const auto& r : residual_1d(bad, f.argument, b, series)) nonzero = nonzero || r != 0;
  EXPECT_TRUE(nonzero);
}

TEST(Precision, ScopeRestoresAndEnvironmentFloor) {
  const unsigned before = Float::default_precision();
  {
    PrecisionScope scope(80);
    EXPECT_EQ(Float::default_precision(), 80u);
  }
  EXPECT_EQ(Float::default_precision(), before);
  setenv("HYPERRED_PRECISION", "80", 1);
  EXPECT_EQ(precision_digits(), 80u);
  setenv("HYPERRED_PRECISION", "20", 1);
  EXPECT_EQ(precision_digits(), 50u);
  setenv("HYPERRED_PRECISION", "junk", 1);
  EXPECT_EQ(precision_digits(), 50u);
  unsetenv("HYPERRED_PRECISION");
  EXPECT_EQ(precision_digits(), 50u);
}
