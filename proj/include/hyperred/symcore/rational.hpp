#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperred {

// Arbitrary-precision rational; GMP keeps it canonical (coprime, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& value);

// Accepts "p", "-p" and "p/q".
Rational parse_rational(std::string_view text);

// Largest integer not exceeding `value`.
Integer floor(const Rational& value);

bool is_integer(const Rational& value);

}  // namespace hyperred
