#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace thetaq {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "n", "n/d" or a plain decimal such as "-0.125" exactly.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& x);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Exact conversions; throw DomainError when the value does not fit.
std::int64_t to_int64(const BigInt& x);

/// Smallest integer >= x.
BigInt ceil(const Rational& x);
BigInt floor(const Rational& x);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

/// True when x is the square of a rational; writes the non-negative root.
bool rational_sqrt(const Rational& x, Rational& root);

}  // namespace thetaq
