#pragma once

#include <string>
#include <vector>

#include "hyperred/symcore/parameter_expr.hpp"

namespace hyperred {

// p+1Fp(upper; lower; argument).
struct PFQSpec {
  std::vector<ParameterExpr> upper;
  std::vector<ParameterExpr> lower;
  Symbol argument = Symbol::argument("z");

  std::size_t p() const noexcept { return lower.size(); }
  // Throws DomainError on arity mismatch or a non-argument symbol.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const PFQSpec&, const PFQSpec&) = default;
};

PFQSpec make_pfq(const std::string& upper, const std::string& lower, const std::string& argument = "z");

}  // namespace hyperred
