#include "hyperred/symcore/rational.hpp"

#include <string>

#include "hyperred/errors.hpp"

namespace hyperred {

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string buffer(text);
  Rational result;
  if (buffer.empty() || result.set_str(buffer, 10) != 0) {
    throw DomainError("malformed rational literal '" + buffer + "'");
  }
  if (result.get_den() == 0) throw DomainError("zero denominator in '" + buffer + "'");
  result.canonicalize();
  return result;
}

Integer floor(const Rational& value) {
  Integer quotient;
  mpz_fdiv_q(quotient.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return quotient;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace hyperred
