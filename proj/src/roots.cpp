#include "chowkit/roots.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chowkit {

namespace {

// Coefficient vector (index = power) of a polynomial in at most one variable.
std::vector<Rational> univariate_coefficients(const MultiPoly& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  const auto used = p.used_variables();
  if (used.size() > 1) throw std::invalid_argument("expected a univariate polynomial, got " + p.to_string());
  if (used.empty()) return {p.constant_term()};
  std::vector<Rational> out;
  for (const auto& c : p.coefficients_in(used.front())) out.push_back(c.constant_term());
  return out;
}

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Integer horner(const std::vector<Integer>& coeffs, const Integer& x) {
  Integer acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides by (x - root), assuming root is a root.
void deflate(std::vector<Integer>& coeffs, const Integer& root) {
  std::vector<Integer> out(coeffs.size() - 1);
  Integer carry = 0;
  for (std::size_t i = coeffs.size() - 1; i > 0; --i) {
    carry = coeffs[i] + carry * root;
    out[i - 1] = carry;
  }
  coeffs = std::move(out);
}

}  // namespace

std::vector<Integer> integer_roots(const MultiPoly& p) {
  const auto rational_coeffs = univariate_coefficients(p);
  std::vector<Integer> coeffs;
  for (const auto& c : rational_coeffs) {
    if (!is_integer(c)) throw std::invalid_argument("integer_roots needs integer coefficients");
    coeffs.push_back(c.get_num());
  }

  std::vector<Integer> roots;
  while (coeffs.size() > 1 && coeffs.front() == 0) {
    roots.push_back(0);
    coeffs.erase(coeffs.begin());
  }
  if (coeffs.size() > 1) {
    for (const auto& d : positive_divisors(coeffs.front())) {
      for (const Integer& candidate : {Integer(-d), d}) {
        while (coeffs.size() > 1 && horner(coeffs, candidate) == 0) {
          roots.push_back(candidate);
          deflate(coeffs, candidate);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Rational> rational_roots(const MultiPoly& p) {
  const auto coeffs = univariate_coefficients(p);
  Integer common = 1;
  for (const auto& c : coeffs) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den().get_mpz_t());

  std::vector<Integer> ints;
  for (const auto& c : coeffs) ints.push_back(Rational(c * common).get_num());
  std::vector<Rational> roots;
  if (ints.size() > 1 && ints.front() == 0) roots.push_back(0);
  while (ints.size() > 1 && ints.front() == 0) ints.erase(ints.begin());
  if (ints.size() <= 1) return roots;

  auto eval = [&](const Rational& x) {
    Rational acc = 0;
    for (auto it = ints.rbegin(); it != ints.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  };
  const auto numerators = positive_divisors(ints.front());
  const auto denominators = positive_divisors(ints.back());
  for (const auto& num : numerators) {
    for (const auto& den : denominators) {
      for (const auto& candidate : {make_rational(-num, den), make_rational(num, den)}) {
        if (eval(candidate) == 0 && std::find(roots.begin(), roots.end(), candidate) == roots.end()) {
          roots.push_back(candidate);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

MultiPoly univariate_gcd(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
  const std::vector<std::string> universe{std::string(var)};
  auto a = f.with_variables(universe);
  auto b = g.with_variables(universe);
  while (!b.is_zero()) {
    auto r = divide(a, b, var).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const auto lead = a.coefficient_in(var, static_cast<unsigned>(a.degree_in(var))).constant_term();
  return a * (1 / lead);
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

}  // namespace chowkit
