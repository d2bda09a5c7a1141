#include "hyperred/cli/cli.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "hyperred/series/oracle.hpp"
#include "hyperred/symcore/parse.hpp"

namespace hyperred::cli {
namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

Rational parse_value(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError(flag + ": '" + text + "' is not a rational number");
  }
}

std::vector<long> parse_shift(const std::string& text) {
  std::vector<long> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  for (const auto& item : split(text, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--shift: '" + item + "' is not an integer");
    }
  }
  return out;
}

std::vector<Rational> parse_point(const std::string& text, const std::vector<std::string>& vars) {
  std::vector<Rational> out(vars.size());
  std::vector<bool> seen(vars.size(), false);
  const auto items = split(text, ',');
  if (items.size() != vars.size()) {
    throw UsageError("--point needs " + std::to_string(vars.size()) + " value(s), got " + std::to_string(items.size()));
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::size_t slot = i;
    std::string value = items[i];
    if (const auto eq = items[i].find('='); eq != std::string::npos) {
      const std::string name = split(items[i].substr(0, eq), ' ').front();
      const auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) throw UsageError("--point: unknown variable '" + name + "'");
      slot = static_cast<std::size_t>(it - vars.begin());
      value = split(items[i].substr(eq + 1), ',').front();
    }
    if (seen[slot]) throw UsageError("--point: variable '" + vars[slot] + "' given twice");
    seen[slot] = true;
    out[slot] = parse_value(value, "--point");
  }
  return out;
}

Bindings parse_assign(const std::string& text) {
  Bindings out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--assign: expected name=value, got '" + item + "'");
    const std::string name = split(item.substr(0, eq), ',').front();
    out[name.substr(0, name.find_last_not_of(" \t") + 1)] = parse_value(split(item.substr(eq + 1), ',').front(), "--assign");
  }
  return out;
}

std::vector<ParameterExpr> parameters(const std::string& text, const std::string& flag, int line) {
  try {
    return parse_parameter_list(text, line);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

void check_request(const Request& r, int line) {
  if (r.format != "text" && r.format != "json") throw UsageError("--format must be text or json");
  if (r.tol <= 0) throw UsageError("--tol must be positive");
  if (r.terms == 0) throw UsageError("--terms must be positive");
  if (r.family == Family::pfq) {
    if (!r.params.empty()) throw UsageError("--params applies to Appell families; use --upper and --lower");
    if (!r.shift.empty()) throw UsageError("--shift applies to Appell families; write shifts into --upper/--lower");
    const auto upper = parameters(r.upper, "--upper", line);
    const auto lower = parameters(r.lower, "--lower", line);
    if (upper.size() != lower.size() + 1) {
      throw UsageError("pfq needs one more --upper than --lower parameter, got " + std::to_string(upper.size()) +
                       " and " + std::to_string(lower.size()));
    }
    if (r.vars.size() != 1) throw UsageError("pfq takes one variable in --vars");
  } else {
    if (!r.upper.empty() || !r.lower.empty()) throw UsageError("Appell families take --params, not --upper/--lower");
    const AppellKind kind = parse_kind(family_name(r.family));
    const auto params = parameters(r.params, "--params", line);
    const std::size_t n = parameter_count(kind);
    if (params.size() != n) {
      throw UsageError("--params needs " + std::to_string(n) + " entries for " + family_name(r.family) + ", got " +
                       std::to_string(params.size()));
    }
    if (r.shift.size() != n) {
      throw UsageError("--shift needs " + std::to_string(n) + " entries for " + family_name(r.family) + ", got " +
                       std::to_string(r.shift.size()));
    }
    if (r.vars.size() != 2) throw UsageError("Appell families take two variables in --vars");
  }
  std::set<std::string> distinct(r.vars.begin(), r.vars.end());
  if (distinct.size() != r.vars.size()) throw UsageError("--vars must be distinct");
  if (!r.point.empty() && r.point.size() != r.vars.size()) throw UsageError("--point does not match --vars");
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return out;
}

std::string to_text(const Rational& q) { return to_string(q); }

json strings(const std::vector<ParameterExpr>& params) {
  json out = json::array();
  for (const auto& p : params) out.push_back(p.to_string());
  return out;
}

std::string float_text(const Float& f) { return f.str(30, std::ios_base::scientific); }

json report_json(const EvalReport& report) {
  return {{"lhs", float_text(report.lhs)},
          {"rhs", float_text(report.rhs)},
          {"relError", report.relative_error.convert_to<double>()},
          {"lastTerm", report.truncation_estimate.convert_to<double>()},
          {"passed", report.passed}};
}

// 1/3, 1/5, 1/7, ... in symbol order, for symbols the caller left unbound.
Bindings complete_assignment(const Bindings& given, const std::vector<ParameterExpr>& params) {
  Bindings out = given;
  std::set<std::string> names;
  for (const auto& p : params) {
    for (const auto& [s, c] : p.linear_part()) names.insert(s.name());
  }
  static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
  std::size_t next = 0;
  for (const auto& name : names) {
    if (out.count(name)) continue;
    const long p = primes[next % std::size(primes)] + 2 * static_cast<long>(next / std::size(primes));
    out[name] = Rational(1, p);
    ++next;
  }
  return out;
}

json assignment_json(const Bindings& b) {
  json out = json::object();
  for (const auto& [name, value] : b) out[name] = to_text(value);
  return out;
}

Outcome run_pfq(const Request& r, json doc) {
  PFQSpec target{parse_parameter_list(r.upper), parse_parameter_list(r.lower), Symbol::argument(r.vars.at(0))};
  target.validate();
  doc["target"] = {{"upper", strings(target.upper)}, {"lower", strings(target.lower)}};
  json flags = json::array();
  for (const auto& a : target.upper) {
    if (a.is_pure_integer()) flags.push_back(a.to_string() + " ∈ ℤ");
  }
  doc["exceptional"] = flags;
  const ReductionResult1D result = reduce(target);
  doc["base"] = {{"upper", strings(result.base.upper)}, {"lower", strings(result.base.lower)}};
  json op = json::object();
  const auto dense = result.dense_coefficients();
  for (std::size_t k = 0; k < dense.size(); ++k) op["t" + std::to_string(k)] = dense[k].to_string();
  doc["operator"] = op;
  doc["factor"] = result.factor.to_string();
  doc["inhomogeneous"] = result.inhomogeneous.to_string();
  if (!result.notes.empty()) doc["notes"] = result.notes;
  Outcome outcome{doc, ok};
  if (r.verify) {
    std::vector<ParameterExpr> all = target.upper;
    all.insert(all.end(), target.lower.begin(), target.lower.end());
    const Bindings assign = complete_assignment(r.assign, all);
    const Rational z = r.point.empty() ? Rational(1, 10) : r.point[0];
    const EvalReport report = verify_reduction(target, result, z, assign, r.terms, r.tol);
    outcome.document["verify"] = report_json(report);
    outcome.document["verify"]["point"] = {to_text(z)};
    outcome.document["verify"]["assign"] = assignment_json(assign);
    if (!report.passed) outcome.exit_code = verification_failed;
  }
  return outcome;
}

Outcome run_appell(const Request& r, json doc) {
  const AppellKind kind = parse_kind(family_name(r.family));
  AppellSpec target{kind, parse_parameter_list(r.params), Symbol::argument(r.vars.at(0)),
                    Symbol::argument(r.vars.at(1))};
  target.validate();
  doc["target"] = {{"params", strings(target.params)}, {"vars", r.vars}};
  const ReductionResult2D result = reduce2d(target, r.shift);
  doc["exceptional"] = json::array();
  doc["base"] = {{"params", strings(result.base.params)}, {"vars", r.vars}};
  json op = json::object();
  for (unsigned i = 0; i <= 1; ++i) {
    for (unsigned j = 0; j <= 1; ++j) {
      if (!is_basis_monomial(kind, i, j)) continue;
      op["t" + std::to_string(i) + "," + std::to_string(j)] = result.op.coefficient(i, j).to_string();
    }
  }
  doc["operator"] = op;
  doc["factor"] = "1";
  doc["inhomogeneous"] = "0";
  Outcome outcome{doc, ok};
  if (r.verify) {
    const Bindings assign = complete_assignment(r.assign, target.params);
    const Rational x = r.point.empty() ? Rational(1, 10) : r.point[0];
    const Rational y = r.point.empty() ? Rational(1, 8) : r.point[1];
    const EvalReport report = verify_reduction(target, result, x, y, assign, r.terms, r.tol);
    outcome.document["verify"] = report_json(report);
    outcome.document["verify"]["point"] = {to_text(x), to_text(y)};
    outcome.document["verify"]["assign"] = assignment_json(assign);
    if (!report.passed) outcome.exit_code = verification_failed;
  }
  return outcome;
}

Outcome failure(json doc, int code, const std::string& message) {
  doc["error"] = message;
  return {std::move(doc), code};
}

// Accepts either a string "a,b" or an array of scalars.
std::string list_text(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (!value.is_array()) throw UsageError("expected a string or an array");
  std::vector<std::string> items;
  for (const auto& v : value) items.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  return join(items);
}

void emit(const Outcome& outcome, const std::string& format, bool compact, std::ostream& out, std::ostream& err) {
  if (format == "json") {
    out << (compact ? outcome.document.dump() : outcome.document.dump(2)) << "\n";
  } else {
    out << render_text(outcome.document);
  }
  if (outcome.document.contains("error")) err << "hyperred: " << outcome.document["error"].get<std::string>() << "\n";
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::pfq: return "pfq";
    case Family::f1: return "appell-f1";
    case Family::f2: return "appell-f2";
    case Family::f3: return "appell-f3";
    case Family::f4: return "appell-f4";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  for (Family f : {Family::pfq, Family::f1, Family::f2, Family::f3, Family::f4}) {
    if (family_name(f) == text) return f;
  }
  throw UsageError("--family must be pfq or appell-f1..appell-f4, got '" + text + "'");
}

Request parse_request(const std::vector<std::string>& args) {
  CLI::App app{"hyperred"};
  std::string family, upper, lower, params, shift, vars, point, assign;
  Request r;
  auto* family_opt = app.add_option("--family", family, "pfq | appell-f1 | appell-f2 | appell-f3 | appell-f4");
  auto* upper_opt = app.add_option("--upper", upper, "upper parameters, e.g. \"a1+1,a2+2,a3\"");
  auto* lower_opt = app.add_option("--lower", lower, "lower parameters");
  auto* params_opt = app.add_option("--params", params, "Appell parameters");
  auto* shift_opt = app.add_option("--shift", shift, "Appell shift vector; the base has parameters params+shift");
  app.add_option("--vars", vars, "argument names (default z, resp. x,y)");
  app.add_option("--format", r.format, "text | json");
  app.add_flag("--verify", r.verify, "check the result against the series");
  app.add_option("--point", point, "evaluation point, e.g. 1/10 or x=1/10,y=1/8");
  app.add_option("--assign", assign, "parameter values, e.g. a1=1/3,b1=2/7");
  app.add_option("--terms", r.terms, "series truncation order");
  app.add_option("--tol", r.tol, "relative tolerance");
  std::vector<std::string> storage{"hyperred"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  if (!*family_opt) throw UsageError("missing --family");
  r.family = parse_family(family);
  if (r.family == Family::pfq) {
    if (!*upper_opt) throw UsageError("missing --upper");
    if (!*lower_opt) throw UsageError("missing --lower");
  } else {
    if (!*params_opt) throw UsageError("missing --params");
    if (!*shift_opt) throw UsageError("missing --shift");
  }
  r.upper = upper;
  r.lower = lower;
  r.params = params;
  r.shift = parse_shift(shift);
  r.vars = vars.empty() ? (r.family == Family::pfq ? std::vector<std::string>{"z"} : std::vector<std::string>{"x", "y"})
                        : split(vars, ',');
  if (!point.empty()) r.point = parse_point(point, r.vars);
  r.assign = parse_assign(assign);
  check_request(r, 1);
  return r;
}

Request request_from_json(const json& doc) {
  if (!doc.is_object()) throw UsageError("batch request must be a JSON object");
  static const std::set<std::string> known{"family", "upper", "lower",  "params", "shift", "vars",
                                           "format", "verify", "point", "assign", "terms", "tol"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) throw UsageError("unknown request key '" + key + "'");
  }
  if (!doc.contains("family")) throw UsageError("missing family");
  Request r;
  try {
    r.family = parse_family(doc.at("family").get<std::string>());
    if (r.family == Family::pfq) {
      if (!doc.contains("upper")) throw UsageError("missing upper");
      if (!doc.contains("lower")) throw UsageError("missing lower");
    } else {
      if (!doc.contains("params")) throw UsageError("missing params");
      if (!doc.contains("shift")) throw UsageError("missing shift");
    }
    if (doc.contains("upper")) r.upper = list_text(doc["upper"]);
    if (doc.contains("lower")) r.lower = list_text(doc["lower"]);
    if (doc.contains("params")) r.params = list_text(doc["params"]);
    if (doc.contains("shift")) r.shift = parse_shift(list_text(doc["shift"]));
    r.vars = doc.contains("vars") ? split(list_text(doc["vars"]), ',')
                                  : (r.family == Family::pfq ? std::vector<std::string>{"z"}
                                                             : std::vector<std::string>{"x", "y"});
    if (doc.contains("format")) r.format = doc["format"].get<std::string>();
    if (doc.contains("verify")) r.verify = doc["verify"].get<bool>();
    if (doc.contains("point")) r.point = parse_point(list_text(doc["point"]), r.vars);
    if (doc.contains("assign")) {
      const json& a = doc["assign"];
      if (a.is_object()) {
        for (const auto& [name, value] : a.items()) {
          r.assign[name] = parse_value(value.is_string() ? value.get<std::string>() : value.dump(), "assign");
        }
      } else {
        r.assign = parse_assign(a.get<std::string>());
      }
    }
    if (doc.contains("terms")) r.terms = doc["terms"].get<unsigned>();
    if (doc.contains("tol")) r.tol = doc["tol"].get<double>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed request: ") + e.what());
  }
  check_request(r, 1);
  return r;
}

json request_to_json(const Request& r) {
  json doc = {{"family", family_name(r.family)}, {"vars", r.vars},    {"format", r.format},
              {"verify", r.verify},              {"terms", r.terms},  {"tol", r.tol}};
  if (r.family == Family::pfq) {
    doc["upper"] = r.upper;
    doc["lower"] = r.lower;
  } else {
    doc["params"] = r.params;
    doc["shift"] = r.shift;
  }
  if (!r.point.empty()) {
    json p = json::array();
    for (const auto& v : r.point) p.push_back(to_text(v));
    doc["point"] = p;
  }
  if (!r.assign.empty()) doc["assign"] = assignment_json(r.assign);
  return doc;
}

Outcome run(const Request& request) {
  json doc = {{"family", family_name(request.family)}, {"request", request_to_json(request)}};
  try {
    return request.family == Family::pfq ? run_pfq(request, doc) : run_appell(request, doc);
  } catch (const ExceptionalParameter& e) {
    doc["exceptional"] = e.violations();
    return failure(doc, exceptional, e.what());
  } catch (const SingularOperator& e) {
    return failure(doc, exceptional, e.what());
  } catch (const ConvergenceError& e) {
    return failure(doc, usage, e.what());
  } catch (const PoleError& e) {
    return failure(doc, usage, e.what());
  } catch (const ParseError& e) {
    return failure(doc, usage, e.what());
  } catch (const UsageError& e) {
    return failure(doc, usage, e.what());
  } catch (const DomainError& e) {
    return failure(doc, usage, e.what());
  } catch (const std::exception& e) {
    return failure(doc, internal, std::string("internal error: ") + e.what());
  }
}

std::string render_text(const json& doc) {
  std::ostringstream out;
  out << "family: " << doc.value("family", "?") << "\n";
  auto describe = [&](const char* label, const json& spec) {
    if (spec.contains("upper")) {
      out << label << ": {" << join(spec["upper"].get<std::vector<std::string>>()) << "}; {"
          << join(spec["lower"].get<std::vector<std::string>>()) << "}\n";
    } else {
      out << label << ": (" << join(spec["params"].get<std::vector<std::string>>()) << "; "
          << join(spec["vars"].get<std::vector<std::string>>()) << ")\n";
    }
  };
  if (doc.contains("target")) describe("target", doc["target"]);
  if (doc.contains("base")) describe("base", doc["base"]);
  if (doc.contains("factor")) out << "factor: " << doc["factor"].get<std::string>() << "\n";
  if (doc.contains("operator")) {
    for (const auto& [key, value] : doc["operator"].items()) out << key << ": " << value.get<std::string>() << "\n";
  }
  if (doc.contains("inhomogeneous")) out << "inhomogeneous: " << doc["inhomogeneous"].get<std::string>() << "\n";
  if (doc.contains("exceptional") && !doc["exceptional"].empty()) {
    out << "exceptional: " << join(doc["exceptional"].get<std::vector<std::string>>()) << "\n";
  }
  if (doc.contains("notes")) {
    for (const auto& note : doc["notes"]) out << "note: " << note.get<std::string>() << "\n";
  }
  if (doc.contains("verify")) {
    const json& v = doc["verify"];
    out << "verify: lhs=" << v["lhs"].get<std::string>() << " rhs=" << v["rhs"].get<std::string>()
        << " relError=" << v["relError"].get<double>() << " lastTerm=" << v["lastTerm"].get<double>() << " "
        << (v["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
  }
  if (doc.contains("error")) out << "error: " << doc["error"].get<std::string>() << "\n";
  return out.str();
}

int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (std::find(args.begin(), args.end(), "--batch") != args.end()) {
      if (args.size() != 1) {
        err << "hyperred: --batch takes no other flags\n";
        return usage;
      }
      int worst = ok;
      std::string line;
      int number = 0;
      while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Outcome outcome;
        try {
          outcome = run(request_from_json(json::parse(line)));
        } catch (const json::parse_error& e) {
          outcome = failure({{"line", number}}, usage, "line " + std::to_string(number) + ": " + e.what());
        } catch (const UsageError& e) {
          outcome = failure({{"line", number}}, usage, "line " + std::to_string(number) + ": " + e.what());
        }
        emit(outcome, "json", true, out, err);
        if (worst == ok) worst = outcome.exit_code;
      }
      return worst;
    }
    Request request = parse_request(args);
    const Outcome outcome = run(request);
    emit(outcome, request.format, false, out, err);
    return outcome.exit_code;
  } catch (const CLI::CallForHelp&) {
    out << "usage: hyperred --family pfq --upper LIST --lower LIST [--vars z]\n"
           "       hyperred --family appell-f1..f4 --params LIST --shift INTS [--vars x,y]\n"
           "       hyperred --batch < requests.jsonl\n"
           "options: --format text|json --verify --point P --assign NAME=VALUE,... --terms N --tol T\n";
    return ok;
  } catch (const UsageError& e) {
    err << "hyperred: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "hyperred: internal error: " << e.what() << "\n";
    return internal;
  }
}

}  // namespace hyperred::cli
