#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace supertrop {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (optional surrounding whitespace); result is canonicalized.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Rational exponent as it appears in series literals: "2", "(3/2)", "(-1/3)".
std::string exponent_string(const Rational& q);

}  // namespace supertrop
