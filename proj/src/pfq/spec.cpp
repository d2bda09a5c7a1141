#include "hyperred/pfq/spec.hpp"

#include "hyperred/errors.hpp"
#include "hyperred/symcore/parse.hpp"

namespace hyperred {
namespace {

std::string join(const std::vector<ParameterExpr>& list) {
  std::string out;
  for (const auto& p : list) {
    if (!out.empty()) out += ",";
    out += p.to_string();
  }
  return out;
}

}  // namespace

void PFQSpec::validate() const {
  if (upper.size() != lower.size() + 1) {
    throw DomainError("p+1Fp needs one more upper than lower parameter, got " + std::to_string(upper.size()) +
                      " and " + std::to_string(lower.size()));
  }
  if (!argument.is_argument()) throw DomainError("'" + argument.name() + "' is not an argument symbol");
  for (const auto* list : {&upper, &lower}) {
    for (const auto& param : *list) {
      for (const auto& [s, c] : param.linear_part()) {
        if (s.name() == argument.name()) throw DomainError("argument '" + s.name() + "' used as a parameter");
      }
    }
  }
}

std::string PFQSpec::to_string() const {
  return std::to_string(upper.size()) + "F" + std::to_string(lower.size()) + "({" + join(upper) + "};{" +
         join(lower) + "};" + argument.name() + ")";
}

PFQSpec make_pfq(const std::string& upper, const std::string& lower, const std::string& argument) {
  PFQSpec spec{parse_parameter_list(upper), parse_parameter_list(lower), Symbol::argument(argument)};
  spec.validate();
  return spec;
}

}  // namespace hyperred
