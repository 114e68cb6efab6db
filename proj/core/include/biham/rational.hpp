#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace biham {

// Canonical form is maintained by gmpxx after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q"; throws Error(Parse) otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Exact power with a signed exponent.
Rational pow(const Rational& base, long exponent);

Integer lcm_of_denominators(const std::vector<Rational>& values);

using Point = std::vector<Rational>;

std::string to_string(const Point& p);

}  // namespace biham
