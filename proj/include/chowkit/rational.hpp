#pragma once

// Exact integers and rationals. Everything numeric in chowkit goes through
// these two types; there is no floating point anywhere in the library.

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chowkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input and std::domain_error on a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

/// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n (n >= 0).
Integer binomial(long n, long k);

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

}  // namespace chowkit
