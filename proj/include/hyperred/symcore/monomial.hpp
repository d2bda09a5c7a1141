#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperred/symcore/symbol.hpp"

namespace hyperred {

// Power product of symbols, stored sorted by the global symbol order with
// strictly positive exponents.
class Monomial {
 public:
  using Factor = std::pair<Symbol, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Symbol symbol, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t exponent(const Symbol& symbol) const;
  bool is_one() const noexcept { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  // Quotient when `divisor` divides this monomial.
  std::optional<Monomial> divide(const Monomial& divisor) const;
  Monomial gcd(const Monomial& other) const;
  // Drops `symbol` entirely and returns the removed exponent through `removed`.
  Monomial without(const Symbol& symbol, std::uint32_t& removed) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

// Graded lexicographic order: total degree first, ties broken lexicographically
// with earlier symbols more significant.
std::strong_ordering compare_grlex(const Monomial& lhs, const Monomial& rhs);

}  // namespace hyperred
