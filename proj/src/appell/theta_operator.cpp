#include "hyperred/appell/theta_operator.hpp"

#include <vector>

#include "hyperred/pfq/theta_operator.hpp"

namespace hyperred {

ThetaOperator2D::ThetaOperator2D(Coeffs coeffs) : coeffs_(std::move(coeffs)) {
  std::erase_if(coeffs_, [](const auto& entry) { return entry.second.is_zero(); });
}

ThetaOperator2D ThetaOperator2D::monomial(unsigned i, unsigned j, RationalFunction coefficient) {
  return ThetaOperator2D({{{i, j}, std::move(coefficient)}});
}

RationalFunction ThetaOperator2D::coefficient(unsigned i, unsigned j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? RationalFunction() : it->second;
}

unsigned ThetaOperator2D::max_x() const {
  unsigned m = 0;
  for (const auto& [key, c] : coeffs_) m = std::max(m, key.first);
  return m;
}

unsigned ThetaOperator2D::max_y() const {
  unsigned m = 0;
  for (const auto& [key, c] : coeffs_) m = std::max(m, key.second);
  return m;
}

void ThetaOperator2D::add_term(unsigned i, unsigned j, const RationalFunction& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace({i, j}, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) coeffs_.erase(it);
}

ThetaOperator2D ThetaOperator2D::operator+(const ThetaOperator2D& rhs) const {
  ThetaOperator2D result = *this;
  for (const auto& [key, c] : rhs.coeffs_) result.add_term(key.first, key.second, c);
  return result;
}

ThetaOperator2D ThetaOperator2D::operator-(const ThetaOperator2D& rhs) const {
  ThetaOperator2D result = *this;
  for (const auto& [key, c] : rhs.coeffs_) result.add_term(key.first, key.second, -c);
  return result;
}

ThetaOperator2D ThetaOperator2D::scaled(const RationalFunction& factor) const {
  if (factor.is_zero()) return {};
  ThetaOperator2D result;
  for (const auto& [key, c] : coeffs_) result.coeffs_.emplace(key, factor * c);
  return result;
}

ThetaOperator2D ThetaOperator2D::transposed() const {
  ThetaOperator2D result;
  for (const auto& [key, c] : coeffs_) result.coeffs_.emplace(Key{key.second, key.first}, c);
  return result;
}

std::string ThetaOperator2D::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (key.first > 0) out += "*tx^" + std::to_string(key.first);
    if (key.second > 0) out += "*ty^" + std::to_string(key.second);
  }
  return out;
}

ThetaOperator2D compose_raw(const ThetaOperator2D& outer, const ThetaOperator2D& inner, const Symbol& x,
                            const Symbol& y) {
  const unsigned top_x = outer.max_x();
  const unsigned top_y = outer.max_y();
  ThetaOperator2D result;
  for (const auto& [inner_key, o] : inner.coeffs()) {
    // derived[s][t] = theta_x^s theta_y^t o
    std::vector<std::vector<RationalFunction>> derived(top_x + 1);
    derived[0].push_back(o);
    for (unsigned s = 1; s <= top_x; ++s) derived[s].push_back(theta_apply(derived[s - 1][0], x));
    for (unsigned s = 0; s <= top_x; ++s) {
      for (unsigned t = 1; t <= top_y; ++t) derived[s].push_back(theta_apply(derived[s][t - 1], y));
    }
    for (const auto& [outer_key, c] : outer.coeffs()) {
      const auto [i, j] = outer_key;
      for (unsigned s = 0; s <= i; ++s) {
        for (unsigned t = 0; t <= j; ++t) {
          const RationalFunction& d = derived[s][t];
          if (d.is_zero()) continue;
          const Rational weight(binomial(i, s) * binomial(j, t));
          result.add_term(i - s + inner_key.first, j - t + inner_key.second, c * d * RationalFunction(weight));
        }
      }
    }
  }
  return result;
}

}  // namespace hyperred
