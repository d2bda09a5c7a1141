#include "hyperred/pfq/theta_operator.hpp"

#include <vector>

namespace hyperred {

ThetaOperator1D::ThetaOperator1D(Coeffs coeffs) : coeffs_(std::move(coeffs)) {
  std::erase_if(coeffs_, [](const auto& entry) { return entry.second.is_zero(); });
}

ThetaOperator1D ThetaOperator1D::monomial(unsigned power, RationalFunction coefficient) {
  return ThetaOperator1D({{power, std::move(coefficient)}});
}

RationalFunction ThetaOperator1D::coefficient(unsigned power) const {
  auto it = coeffs_.find(power);
  return it == coeffs_.end() ? RationalFunction() : it->second;
}

void ThetaOperator1D::add_term(unsigned power, const RationalFunction& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(power, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) coeffs_.erase(it);
}

ThetaOperator1D ThetaOperator1D::operator+(const ThetaOperator1D& rhs) const {
  ThetaOperator1D result = *this;
  for (const auto& [k, c] : rhs.coeffs_) result.add_term(k, c);
  return result;
}

ThetaOperator1D ThetaOperator1D::operator-(const ThetaOperator1D& rhs) const {
  ThetaOperator1D result = *this;
  for (const auto& [k, c] : rhs.coeffs_) result.add_term(k, -c);
  return result;
}

ThetaOperator1D ThetaOperator1D::scaled(const RationalFunction& factor) const {
  if (factor.is_zero()) return {};
  ThetaOperator1D result;
  for (const auto& [k, c] : coeffs_) result.coeffs_.emplace(k, factor * c);
  return result;
}

std::string ThetaOperator1D::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (k > 0) out += "*t^" + std::to_string(k);
  }
  return out;
}

RationalFunction theta_apply(const RationalFunction& r, const Symbol& z, unsigned k) {
  RationalFunction out = r;
  const RationalFunction zf(z);
  for (unsigned i = 0; i < k && !out.is_zero(); ++i) out = zf * out.derivative(z);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

ThetaOperator1D compose_raw(const ThetaOperator1D& outer, const ThetaOperator1D& inner, const Symbol& z) {
  const unsigned top = outer.is_zero() ? 0 : static_cast<unsigned>(outer.max_power());
  ThetaOperator1D result;
  for (const auto& [j, o] : inner.coeffs()) {
    // theta^l applied to the inner coefficient, l = 0..top.
    std::vector<RationalFunction> derived{o};
    for (unsigned l = 1; l <= top; ++l) derived.push_back(theta_apply(derived.back(), z));
    for (const auto& [k, s] : outer.coeffs()) {
      for (unsigned l = 0; l <= k; ++l) {
        if (derived[l].is_zero()) continue;
        result.add_term(k - l + j, s * derived[l] * RationalFunction(Rational(binomial(k, l))));
      }
    }
  }
  return result;
}

RationalFunction apply_to_rational(const ThetaOperator1D& op, const RationalFunction& r, const Symbol& z) {
  RationalFunction out;
  RationalFunction image = r;
  unsigned at = 0;
  for (const auto& [k, c] : op.coeffs()) {
    image = theta_apply(image, z, k - at);
    at = k;
    out += c * image;
  }
  return out;
}

}  // namespace hyperred
