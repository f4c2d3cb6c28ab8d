#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace innerforms {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational num/den.
Rational make_rational(long num, long den = 1);

/// "r/s" in lowest terms with s > 0; integers keep the "/1".
std::string to_string(const Rational& q);

/// Accepts "r/s", "r" or an integer literal; throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

/// Fractional part in [0, 1).
Rational mod_one(const Rational& q);

BigInt denominator_of(const Rational& q);
BigInt numerator_of(const Rational& q);

long gcd_long(long a, long b);
long lcm_long(long a, long b);

/// Converts a BigInt known to fit in a long; throws otherwise.
long to_long(const BigInt& z);

}  // namespace innerforms
