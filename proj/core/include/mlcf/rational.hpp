#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mlcf {

using Int = mpz_class;
using Rational = mpq_class;

enum class Rounding { Down, Up, Nearest };

// Exact value of a decimal literal such as "3.70969985975033", "-0.5",
// "1e-13" or a fraction "1/35".
Rational parse_rational(std::string_view text);

// Decimal expansion with exactly `digits` fractional digits, rounded in the
// requested direction.
std::string to_decimal(const Rational& q, int digits, Rounding mode = Rounding::Nearest);

// Shortest decimal string for q, which must have a terminating expansion.
std::string to_exact_decimal(const Rational& q);

// Number of fractional digits of a decimal literal ("3.7165" -> 4).
int decimal_places(std::string_view text);

// 2^e as a rational, e may be negative.
Rational pow2(long e);

// 10^e as a rational, e may be negative.
Rational pow10(long e);

// floor(q) and ceil(q).
Int floor(const Rational& q);
Int ceil(const Rational& q);

// Smallest e with 2^-e <= q (q > 0).
long bits_for(const Rational& q);

}  // namespace mlcf
