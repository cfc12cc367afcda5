#include <gtest/gtest.h>

#include <random>

#include "chowkit/multipoly.hpp"
#include "chowkit/resultant.hpp"
#include "chowkit/roots.hpp"

using namespace chowkit;

namespace {

MultiPoly var(const char* name) { return MultiPoly::variable(name); }
MultiPoly num(long v) { return MultiPoly::constant(Rational(v)); }

MultiPoly random_univariate(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(coeff(rng));
  if (c.back() == 0) c.back() = 1;
  return MultiPoly::univariate("tau", c);
}

}  // namespace

TEST(Rational, NormalizesAndParses) {
  EXPECT_EQ(make_rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_EQ(parse_rational("-10/4"), Rational(-5, 2));
  EXPECT_EQ(parse_rational("+7/7"), Rational(1));
  EXPECT_THROW(parse_rational("1/0"), std::domain_error);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, BinomialConvention) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(pow(Rational(-2, 3), 3), Rational(-8, 27));
}

TEST(MultiPoly, DifferenceOfSquares) {
  const auto tau = var("tau");
  EXPECT_EQ(((tau + num(1)) * (tau - num(1))).to_string(), "tau^2 - 1");
}

TEST(MultiPoly, ScaledSlopeFactor) {
  const auto tau = var("tau");
  const auto k = var("k");
  const auto p = Rational(3) * (tau - Rational(2) * k) *
                 (Rational(5) * tau.pow(3) + Rational(10) * k * tau.pow(2) - Rational(10) * k.pow(2) * tau -
                  Rational(6) * k.pow(3));
  EXPECT_EQ(p.to_string(), "15*tau^4 - 90*tau^2*k^2 + 42*tau*k^3 + 36*k^4");
}

TEST(MultiPoly, AdditiveIdentityAndNoStoredZeros) {
  const auto p = var("x") * var("y") + num(3);
  EXPECT_EQ(p + MultiPoly(), p);
  const auto z = p - p;
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
  EXPECT_EQ(z.to_string(), "0");
}

TEST(MultiPoly, GradedLexLeadingTerm) {
  const auto x = MultiPoly::variable("x", {"x", "y"});
  const auto y = MultiPoly::variable("y", {"x", "y"});
  const auto p = y.pow(2) + x * y + x.pow(3) + num(1);
  EXPECT_EQ(p.terms().begin()->first, (Exponents{3, 0}));
  EXPECT_EQ(p.to_string(), "x^3 + x*y + y^2 + 1");
}

TEST(MultiPoly, SubstituteAndEvaluate) {
  const auto a = var("a");
  const auto b = var("b");
  const auto p = a * a + Rational(2) * a * b;
  EXPECT_EQ(p.substitute("a", Rational(3)).to_string(), "6*b + 9");
  EXPECT_EQ(p.evaluate({{"a", 3}, {"b", Rational(1, 2)}}), 12);
  EXPECT_THROW(p.evaluate({{"a", 1}}), std::invalid_argument);
  EXPECT_EQ(p.coefficient_of({{"a", 1}, {"b", 1}}), 2);
  EXPECT_EQ(p.degree_in("a"), 2);
  EXPECT_EQ(MultiPoly().degree_in("a"), -1);
}

TEST(MultiPoly, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-4, 4);
  auto random_poly = [&] {
    MultiPoly p({"x", "y"});
    for (unsigned i = 0; i < 3; ++i) {
      for (unsigned j = 0; j < 3; ++j) p.add_term({i, j}, Rational(c(rng)));
    }
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_poly();
    const auto q = random_poly();
    const auto r = random_poly();
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
  }
}

TEST(Division, ExactFactorPair) {
  const auto tau = var("tau");
  const auto k = var("k");
  const auto d = divide(tau.pow(2) - k.pow(2), tau - k, "tau");
  EXPECT_TRUE(d.exact());
  EXPECT_EQ(d.quotient, tau + k);
}

TEST(Division, ReportsRemainder) {
  const auto tau = var("tau");
  const auto d = divide(tau.pow(2) + num(1), tau - num(1), "tau");
  EXPECT_FALSE(d.exact());
  EXPECT_EQ(d.remainder, num(2));
  EXPECT_EQ(d.quotient, tau + num(1));
}

TEST(Division, RejectsBadDivisors) {
  const auto tau = var("tau");
  EXPECT_THROW(divide(tau, MultiPoly(), "tau"), std::domain_error);
  EXPECT_THROW(divide(tau.pow(2), var("a") * tau, "tau"), std::invalid_argument);
  EXPECT_THROW(divide_exact(tau, MultiPoly()), std::domain_error);
}

TEST(Division, ReconstructsDividend) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_univariate(rng, 6);
    const auto g = random_univariate(rng, 1 + trial % 4);
    const auto d = divide(f, g, "tau");
    EXPECT_EQ(d.quotient * g + d.remainder, f);
    EXPECT_LT(d.remainder.degree_in("tau"), g.degree_in("tau"));
  }
}

TEST(Division, MultivariateExact) {
  const auto a = var("a");
  const auto b = var("b");
  const auto f = a + b;
  const auto g = a - Rational(2) * b;
  const auto q = divide_exact(f * g * f, f);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, f * g);
  EXPECT_FALSE(divide_exact(f * g + num(1), f).has_value());
}

TEST(Resultant, Linear) {
  const auto tau = var("tau");
  const auto a = var("a");
  const auto b = var("b");
  // det [[1, -a], [1, -b]] with f's row on top
  EXPECT_EQ(sylvester_resultant(tau - a, tau - b, "tau"), a - b);
}

TEST(Resultant, CommonRootGivesZero) {
  const auto tau = var("tau");
  EXPECT_TRUE(sylvester_resultant(tau.pow(2), tau, "tau").is_zero());
}

TEST(Resultant, MatrixShape) {
  const auto tau = var("tau");
  const auto m = sylvester_matrix(tau.pow(5) + num(1), tau.pow(4) + tau, "tau");
  EXPECT_EQ(m.dimension(), 9U);
  EXPECT_EQ(m.entries[0][0], num(1));
  EXPECT_EQ(m.entries[4][0], num(1));
  EXPECT_THROW(sylvester_matrix(num(3), tau, "tau"), std::invalid_argument);
}

TEST(Resultant, VanishesExactlyWithCommonFactor) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> root(-4, 4);
  const auto tau = var("tau");
  for (int trial = 0; trial < 30; ++trial) {
    const auto shared = tau - num(root(rng));
    const auto f = random_univariate(rng, 1 + trial % 5) * shared;
    const auto g = random_univariate(rng, 1 + (trial + 2) % 5) * shared;
    EXPECT_TRUE(sylvester_resultant(f, g, "tau").is_zero());
  }
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_univariate(rng, 1 + trial % 6);
    const auto g = random_univariate(rng, 1 + (trial + 3) % 6);
    const bool coprime = univariate_gcd(f, g, "tau").degree_in("tau") == 0;
    EXPECT_EQ(!sylvester_resultant(f, g, "tau").is_zero(), coprime);
  }
}

TEST(Bareiss, ParallelMatchesSerial) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-3, 3);
  const auto a = var("a");
  for (int size = 1; size <= 7; ++size) {
    PolyMatrix m(static_cast<std::size_t>(size), std::vector<MultiPoly>(static_cast<std::size_t>(size)));
    for (auto& row : m) {
      for (auto& e : row) e = Rational(c(rng)) * a + num(c(rng));
    }
    EXPECT_EQ(bareiss_determinant(m), bareiss_determinant_serial(m));
  }
}

TEST(Bareiss, NeedsPivoting) {
  PolyMatrix m{{num(0), num(1)}, {num(1), num(0)}};
  EXPECT_EQ(bareiss_determinant(m), num(-1));
  EXPECT_EQ(bareiss_determinant_serial(m), num(-1));
}

TEST(Roots, IntegerRoots) {
  const auto tau = var("tau");
  EXPECT_EQ(integer_roots(tau.pow(2) - num(4)), (std::vector<Integer>{-2, 2}));
  EXPECT_TRUE(integer_roots(tau.pow(2) + num(1)).empty());
  const auto g = Rational(15) * tau.pow(4) - Rational(90) * tau.pow(2) + Rational(42) * tau + num(36);
  EXPECT_EQ(integer_roots(g), (std::vector<Integer>{2}));
  EXPECT_EQ(integer_roots((tau - num(3)).pow(2) * tau), (std::vector<Integer>{0, 3, 3}));
  EXPECT_THROW(integer_roots(MultiPoly()), std::domain_error);
  EXPECT_THROW(integer_roots(tau * var("a")), std::invalid_argument);
  EXPECT_THROW(integer_roots(tau + MultiPoly::constant(Rational(1, 2))), std::invalid_argument);
}

TEST(Roots, RationalRootsAndGcd) {
  const auto tau = var("tau");
  const auto p = (Rational(2) * tau - num(1)) * (Rational(3) * tau + num(2)) * (tau.pow(2) + num(1));
  EXPECT_EQ(rational_roots(p), (std::vector<Rational>{Rational(-2, 3), Rational(1, 2)}));
  const auto g = univariate_gcd(p, (Rational(2) * tau - num(1)) * (tau - num(5)), "tau");
  EXPECT_EQ(g, tau - MultiPoly::constant(Rational(1, 2)));
  EXPECT_TRUE(univariate_gcd(MultiPoly(), MultiPoly(), "tau").is_zero());
}

TEST(Roots, IntegerSquareRoot) {
  EXPECT_EQ(isqrt(Integer(99)), 9);
  EXPECT_TRUE(is_perfect_square(Integer(144)));
  EXPECT_FALSE(is_perfect_square(Integer(-4)));
  EXPECT_THROW(isqrt(Integer(-1)), std::domain_error);
}
