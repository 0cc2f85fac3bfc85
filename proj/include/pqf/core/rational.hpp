#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace pqf {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: lowest terms, denominator > 0

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

// Nearest integer; exact half-integers go to the even neighbour.
Integer round_half_even(const Rational& x);

// Nearest multiple of 2^-bits (half-even on ties).
Rational round_to_dyadic(const Rational& x, unsigned bits);

// Rational upper bound on sqrt(x) with error below 2^-bits, x >= 0.
Rational sqrt_upper(const Rational& x, unsigned bits);

std::size_t bit_length(const Integer& x);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

// Accepts "p" or "p/q" with optional leading '-'; throws kSchemaViolation.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

}  // namespace pqf
