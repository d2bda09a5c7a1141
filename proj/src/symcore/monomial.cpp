#include "hyperred/symcore/monomial.hpp"

#include <algorithm>

namespace hyperred {

Monomial::Monomial(Symbol symbol, std::uint32_t exponent) {
  if (exponent > 0) {
    factors_.emplace_back(std::move(symbol), exponent);
    degree_ = exponent;
  }
}

std::uint32_t Monomial::exponent(const Symbol& symbol) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), symbol,
                             [](const Factor& f, const Symbol& s) { return f.first < s; });
  return (it != factors_.end() && it->first == symbol) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial result;
  result.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first == b->first) {
      result.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    } else if (a->first < b->first) {
      result.factors_.push_back(*a++);
    } else {
      result.factors_.push_back(*b++);
    }
  }
  result.factors_.insert(result.factors_.end(), a, factors_.end());
  result.factors_.insert(result.factors_.end(), b, other.factors_.end());
  result.degree_ = degree_ + other.degree_;
  return result;
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const {
  if (divisor.degree_ > degree_) return std::nullopt;
  Monomial result;
  auto a = factors_.begin();
  auto b = divisor.factors_.begin();
  while (b != divisor.factors_.end()) {
    while (a != factors_.end() && a->first < b->first) result.factors_.push_back(*a++);
    if (a == factors_.end() || a->first != b->first || a->second < b->second) return std::nullopt;
    if (a->second > b->second) result.factors_.emplace_back(a->first, a->second - b->second);
    ++a;
    ++b;
  }
  result.factors_.insert(result.factors_.end(), a, factors_.end());
  result.degree_ = degree_ - divisor.degree_;
  return result;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial result;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first == b->first) {
      const auto e = std::min(a->second, b->second);
      result.factors_.emplace_back(a->first, e);
      result.degree_ += e;
      ++a;
      ++b;
    } else if (a->first < b->first) {
      ++a;
    } else {
      ++b;
    }
  }
  return result;
}

Monomial Monomial::without(const Symbol& symbol, std::uint32_t& removed) const {
  Monomial result;
  removed = 0;
  for (const auto& f : factors_) {
    if (f.first == symbol) {
      removed = f.second;
    } else {
      result.factors_.push_back(f);
      result.degree_ += f.second;
    }
  }
  return result;
}

std::strong_ordering compare_grlex(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.degree() != rhs.degree()) return lhs.degree() <=> rhs.degree();
  const auto& a = lhs.factors();
  const auto& b = rhs.factors();
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first == ib->first) {
      if (ia->second != ib->second) return ia->second <=> ib->second;
      ++ia;
      ++ib;
      continue;
    }
    // The symbol present only on one side is the more significant one there.
    return ia->first < ib->first ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (ia != a.end()) return std::strong_ordering::greater;
  if (ib != b.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

}  // namespace hyperred
