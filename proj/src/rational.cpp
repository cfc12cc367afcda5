#include "chowkit/rational.hpp"

#include <stdexcept>

namespace chowkit {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::string s(part);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) {
      throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    }
    return z;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const Integer& value) { return value.get_str(10); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational pow(const Rational& base, unsigned long exponent) {
  return make_rational(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
}

}  // namespace chowkit
