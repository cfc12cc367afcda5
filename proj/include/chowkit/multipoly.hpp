#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chowkit/rational.hpp"

namespace chowkit {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, largest monomial first. Ties in total degree
/// are broken lexicographically along the declared variable order.
struct GrlexGreater {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// A polynomial carries an ordered variable universe. Binary operations on
/// polynomials with different universes first unify them by name: the left
/// operand's variables come first, followed by the right operand's new ones.
/// Zero coefficients are never stored, and terms iterate in GrlexGreater order
/// so the first term is the leading term.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(const Rational& value, std::vector<std::string> variables = {});
  static MultiPoly variable(std::string_view name, std::vector<std::string> variables = {});
  /// Builds sum coeffs[i] * var^i.
  static MultiPoly univariate(std::string_view var, const std::vector<Rational>& coeffs);

  const std::vector<std::string>& variables() const { return variables_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// The value if the polynomial has no non-constant term.
  std::optional<Rational> as_constant() const;
  Rational constant_term() const;

  /// Adds a term; exps is indexed by the current universe.
  void add_term(Exponents exps, const Rational& coeff);

  /// Degree in `var`; -1 for the zero polynomial, 0 if `var` is absent.
  int degree_in(std::string_view var) const;
  int total_degree() const;
  /// Variables that occur with a positive exponent, in universe order.
  std::vector<std::string> used_variables() const;

  /// Coefficient of var^power as a polynomial in the remaining variables
  /// (universe unchanged, `var` simply never appears).
  MultiPoly coefficient_in(std::string_view var, unsigned power) const;
  /// All coefficients in `var`, index = power. Empty for the zero polynomial.
  std::vector<MultiPoly> coefficients_in(std::string_view var) const;

  MultiPoly substitute(std::string_view var, const MultiPoly& value) const;
  MultiPoly substitute(std::string_view var, const Rational& value) const;
  /// Evaluates completely; throws std::invalid_argument if a used variable
  /// has no value.
  Rational evaluate(const std::map<std::string, Rational, std::less<>>& values) const;

  /// Re-expresses the polynomial in a universe containing all used variables.
  MultiPoly with_variables(std::vector<std::string> universe) const;
  /// Removes variables that do not occur.
  MultiPoly compacted() const;

  MultiPoly pow(unsigned exponent) const;
  MultiPoly operator-() const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& scalar);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend MultiPoly operator*(const Rational& lhs, MultiPoly rhs) { return rhs *= lhs; }
  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs);

  /// e.g. "15*tau^4 - 90*k^2*tau^2 + 42*k^3*tau + 36*k^4".
  std::string to_string() const;

  /// Coefficient of an exact monomial given as (name, exponent) pairs.
  Rational coefficient_of(std::initializer_list<std::pair<std::string_view, unsigned>> monomial) const;

 private:
  std::optional<std::size_t> index_of(std::string_view var) const;
  static std::vector<std::string> unify(const std::vector<std::string>& lhs,
                                        const std::vector<std::string>& rhs);

  std::vector<std::string> variables_;
  TermMap terms_;
};

/// Result of dividing by a polynomial in a single distinguished variable:
/// dividend == quotient * divisor + remainder with deg(remainder) < deg(divisor).
struct DivisionResult {
  MultiPoly quotient;
  MultiPoly remainder;
  bool exact() const { return remainder.is_zero(); }
};

/// Long division in `var`. The divisor's leading coefficient in `var` must be
/// a nonzero rational constant. Throws std::domain_error for a zero divisor
/// and std::invalid_argument for a non-constant leading coefficient.
DivisionResult divide(const MultiPoly& dividend, const MultiPoly& divisor, std::string_view var);

/// Multivariate exact division. Returns std::nullopt when `divisor` does not
/// divide `dividend` in Q[vars]. Throws std::domain_error for a zero divisor.
std::optional<MultiPoly> divide_exact(const MultiPoly& dividend, const MultiPoly& divisor);

}  // namespace chowkit
