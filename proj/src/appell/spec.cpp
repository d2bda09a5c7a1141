#include "hyperred/appell/spec.hpp"

#include <algorithm>
#include <cctype>

#include "hyperred/errors.hpp"
#include "hyperred/symcore/parse.hpp"

namespace hyperred {

std::size_t parameter_count(AppellKind kind) {
  return kind == AppellKind::F2 || kind == AppellKind::F3 ? 5 : 4;
}

std::string kind_name(AppellKind kind) {
  switch (kind) {
    case AppellKind::F1: return "F1";
    case AppellKind::F2: return "F2";
    case AppellKind::F3: return "F3";
    case AppellKind::F4: return "F4";
  }
  return "?";
}

const std::vector<std::string>& slot_names(AppellKind kind) {
  static const std::vector<std::string> f1{"a", "b1", "b2", "c"};
  static const std::vector<std::string> f2{"a", "b1", "b2", "c1", "c2"};
  static const std::vector<std::string> f3{"a1", "a2", "b1", "b2", "c"};
  static const std::vector<std::string> f4{"a", "b", "c1", "c2"};
  switch (kind) {
    case AppellKind::F1: return f1;
    case AppellKind::F2: return f2;
    case AppellKind::F3: return f3;
    case AppellKind::F4: return f4;
  }
  return f1;
}

AppellKind parse_kind(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s.rfind("appell-", 0) == 0) s = s.substr(7);
  if (s == "f1") return AppellKind::F1;
  if (s == "f2") return AppellKind::F2;
  if (s == "f3") return AppellKind::F3;
  if (s == "f4") return AppellKind::F4;
  throw DomainError("unknown Appell kind '" + std::string(text) + "'");
}

void AppellSpec::validate() const {
  if (params.size() != parameter_count(kind)) {
    throw DomainError("Appell " + kind_name(kind) + " takes " + std::to_string(parameter_count(kind)) +
                      " parameters, got " + std::to_string(params.size()));
  }
  if (x == y) throw DomainError("Appell arguments must differ");
  if (!x.is_argument() || !y.is_argument()) throw DomainError("Appell arguments must be argument symbols");
  for (const auto& param : params) {
    for (const auto& [s, c] : param.linear_part()) {
      if (s.name() == x.name() || s.name() == y.name()) {
        throw DomainError("argument '" + s.name() + "' used as a parameter");
      }
    }
  }
}

std::string AppellSpec::to_string() const {
  std::string out = kind_name(kind) + "(";
  for (const auto& p : params) out += p.to_string() + ",";
  return out + x.name() + "," + y.name() + ")";
}

AppellSpec make_appell(AppellKind kind, const std::string& params, const std::string& x, const std::string& y) {
  AppellSpec spec{kind, parse_parameter_list(params), Symbol::argument(x), Symbol::argument(y)};
  spec.validate();
  return spec;
}

}  // namespace hyperred
