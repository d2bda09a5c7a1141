#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace hyperred {

enum class SymbolKind : std::uint8_t { parameter = 0, argument = 1 };

// A named indeterminate. Parameters order before arguments, then names compare
// lexicographically; that global order fixes the monomial order and therefore
// the canonical sign of every denominator factor.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string name, SymbolKind kind = SymbolKind::parameter)
      : kind_(kind), name_(std::move(name)) {}

  static Symbol parameter(std::string name) { return Symbol(std::move(name), SymbolKind::parameter); }
  static Symbol argument(std::string name) { return Symbol(std::move(name), SymbolKind::argument); }

  const std::string& name() const noexcept { return name_; }
  SymbolKind kind() const noexcept { return kind_; }
  bool is_argument() const noexcept { return kind_ == SymbolKind::argument; }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
  friend bool operator==(const Symbol&, const Symbol&) = default;

 private:
  SymbolKind kind_ = SymbolKind::parameter;
  std::string name_;
};

}  // namespace hyperred
