#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperred/errors.hpp"
#include "hyperred/symcore/polynomial.hpp"

namespace hyperred::cli {

enum ExitCode : int { ok = 0, usage = 2, exceptional = 3, verification_failed = 4, internal = 5 };

enum class Family { pfq, f1, f2, f3, f4 };

std::string family_name(Family family);
// "pfq", "appell-f1" .. "appell-f4". UsageError otherwise.
Family parse_family(const std::string& text);

// Malformed or inconsistent command line; exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Request {
  Family family = Family::pfq;
  std::string upper;
  std::string lower;
  std::string params;
  std::vector<long> shift;
  std::vector<std::string> vars;
  std::string format = "text";
  bool verify = false;
  // Empty means the default point.
  std::vector<Rational> point;
  // Empty means the default assignment.
  Bindings assign;
  unsigned terms = 120;
  double tol = 1e-12;
};

// Command-line arguments without the program name. Throws UsageError or
// ParseError; arity and parameter syntax are checked here.
Request parse_request(const std::vector<std::string>& args);
// One line of batch input.
Request request_from_json(const nlohmann::json& doc);
nlohmann::json request_to_json(const Request& request);

struct Outcome {
  nlohmann::json document;
  int exit_code = ok;
};

// Runs the reduction and the optional verification. Library errors are
// mapped to exit codes; the document then carries an "error" entry.
Outcome run(const Request& request);

std::string render_text(const nlohmann::json& document);

// Full program: flags, or batch mode with --batch (one JSON request per
// input line, one JSON response per output line).
int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hyperred::cli
