#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace pbun {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or an integer literal. Decimal points and exponents are
/// rejected; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// True for p^e with p prime, e >= 1. Trial division up to 10^6.
bool is_prime_power(std::int64_t q);
bool is_prime(std::int64_t p);

} // namespace pbun
