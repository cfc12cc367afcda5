#pragma once

#include <string_view>
#include <vector>

#include "chowkit/multipoly.hpp"

namespace chowkit {

/// Integer roots of a univariate polynomial with integer coefficients,
/// repeated according to multiplicity and sorted ascending. Candidates are
/// the divisors of the trailing nonzero coefficient.
/// Throws std::invalid_argument for multivariate or non-integral input and
/// std::domain_error for the zero polynomial.
std::vector<Integer> integer_roots(const MultiPoly& p);

/// Distinct rational roots of a univariate polynomial over Q, ascending.
std::vector<Rational> rational_roots(const MultiPoly& p);

/// Monic gcd over Q of two polynomials in `var` alone. gcd(0, 0) = 0.
MultiPoly univariate_gcd(const MultiPoly& f, const MultiPoly& g, std::string_view var);

/// floor(sqrt(n)); throws std::domain_error for n < 0.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

}  // namespace chowkit
