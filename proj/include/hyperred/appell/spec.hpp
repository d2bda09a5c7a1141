#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperred/symcore/parameter_expr.hpp"

namespace hyperred {

enum class AppellKind { F1, F2, F3, F4 };

// Parameter order: F1 (a,b1,b2,c), F2 (a,b1,b2,c1,c2), F3 (a1,a2,b1,b2,c),
// F4 (a,b,c1,c2).
struct AppellSpec {
  AppellKind kind = AppellKind::F1;
  std::vector<ParameterExpr> params;
  Symbol x = Symbol::argument("x");
  Symbol y = Symbol::argument("y");

  // Throws DomainError on a wrong parameter count or clashing arguments.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const AppellSpec&, const AppellSpec&) = default;
};

std::size_t parameter_count(AppellKind kind);
std::string kind_name(AppellKind kind);
// Names of the parameter slots, e.g. {"a","b1","b2","c"}.
const std::vector<std::string>& slot_names(AppellKind kind);
// Accepts "F1".."F4" and "appell-f1".."appell-f4", any case.
AppellKind parse_kind(std::string_view text);

AppellSpec make_appell(AppellKind kind, const std::string& params, const std::string& x = "x",
                       const std::string& y = "y");

}  // namespace hyperred
