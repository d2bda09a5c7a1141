#include <gtest/gtest.h>

#include <random>

#include "hyperred/errors.hpp"
#include "hyperred/symcore/parse.hpp"

using namespace hyperred;

namespace {

const std::vector<Symbol> kSymbols = {Symbol::parameter("a"), Symbol::parameter("b"), Symbol::parameter("c"),
                                      Symbol::argument("x")};

Rational random_rational(std::mt19937_64& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Polynomial random_affine(std::mt19937_64& rng) {
  std::vector<Term> terms;
  std::uniform_int_distribution<int> coin(0, 2);
  for (const auto& s : kSymbols) {
    if (coin(rng) == 0) terms.push_back(Term{Monomial(s), random_rational(rng)});
  }
  terms.push_back(Term{Monomial(), random_rational(rng)});
  Polynomial p = Polynomial::from_terms(std::move(terms));
  return p.is_zero() ? Polynomial(Rational(1)) : p;
}

Polynomial random_polynomial(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 3);
  Polynomial p(Rational(1));
  const int n = count(rng);
  for (int i = 0; i < n; ++i) p = p * random_affine(rng);
  return p + random_affine(rng);
}

RationalFunction random_rf(std::mt19937_64& rng) {
  RationalFunction r(random_polynomial(rng));
  std::uniform_int_distribution<int> count(0, 2);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) r = r / RationalFunction(random_affine(rng));
  return r;
}

Bindings random_point(std::mt19937_64& rng) {
  Bindings b;
  for (const auto& s : kSymbols) b[s.name()] = random_rational(rng, 97);
  return b;
}

// Both sides evaluated at a point, skipping points that hit a pole.
void expect_same_values(const RationalFunction& lhs, const RationalFunction& rhs, std::mt19937_64& rng) {
  int checked = 0;
  for (int attempt = 0; attempt < 20 && checked < 3; ++attempt) {
    const auto point = random_point(rng);
    try {
      const Rational l = lhs.evaluate(point);
      const Rational r = rhs.evaluate(point);
      EXPECT_EQ(l, r);
      ++checked;
    } catch (const PoleError&) {
    }
  }
  EXPECT_GT(checked, 0);
}

}  // namespace

TEST(SymcoreProperty, RandomIdentitiesAreStructurallyCanonical) {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_rf(rng);
    const auto q = random_rf(rng);
    const auto r = random_rf(rng);
    // (p + q) * r rebuilt through a different association must agree structurally.
    const auto lhs = (p + q) * r;
    const auto rhs = r * q + p * r;
    EXPECT_EQ(lhs, rhs) << lhs.to_string() << " vs " << rhs.to_string();
    expect_same_values(lhs, (p + q) * r, rng);
    // (p * q) / q = p when q is nonzero.
    if (!q.is_zero()) EXPECT_EQ((p * q) / q, p);
    EXPECT_TRUE((p - p).is_zero());
  }
}

TEST(SymcoreProperty, RingAxiomsForPolynomials) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_polynomial(rng);
    const auto q = random_polynomial(rng);
    const auto r = random_polynomial(rng);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
  }
}

TEST(SymcoreProperty, RingAxiomsForRationalFunctionsSemantically) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_rf(rng);
    const auto q = random_rf(rng);
    const auto r = random_rf(rng);
    expect_same_values((p + q) + r, p + (q + r), rng);
    expect_same_values((p * q) * r, p * (q * r), rng);
    expect_same_values(p * (q + r), p * q + p * r, rng);
    expect_same_values(p * q, q * p, rng);
  }
}

TEST(SymcoreProperty, ExactDivisionRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_polynomial(rng);
    const auto d = random_polynomial(rng);
    if (auto q = (p * d).divide_exact(d)) {
      EXPECT_EQ(*q * d, p * d);
      EXPECT_EQ(*q, p);
    } else {
      ADD_FAILURE() << "product not divisible";
    }
    if (auto q = p.divide_exact(d)) EXPECT_EQ(*q * d, p);
  }
}

TEST(SymcoreProperty, ShiftIsAGroupAction) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> delta(-50, 50);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = ParameterExpr::from_affine({{Symbol::parameter("a"), random_rational(rng)}}, random_rational(rng));
    const long m = delta(rng);
    EXPECT_EQ(p.shifted(m).shifted(-m), p);
    EXPECT_EQ(p.shifted(m).offset(), p.offset() + m);
  }
}

TEST(SymcoreProperty, PrintedFormReparses) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = random_rf(rng);
    EXPECT_EQ(parse_expression(r.to_string(), {"x"}), r) << r.to_string();
  }
}

TEST(SymcoreProperty, CancellationFindsHiddenFactors) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_polynomial(rng);
    const auto d = random_polynomial(rng);
    if (d.is_constant()) continue;
    const RationalFunction ratio = RationalFunction(p * d) / RationalFunction(d);
    EXPECT_TRUE(ratio.is_polynomial());
    EXPECT_EQ(ratio, RationalFunction(p));
    EXPECT_FALSE((p * d + Polynomial(Rational(1))).divide_exact(d).has_value());
  }
}
