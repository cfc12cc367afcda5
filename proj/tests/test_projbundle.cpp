#include <gtest/gtest.h>

#include "chowkit/corpus.hpp"
#include "chowkit/projbundle.hpp"
#include "chowkit/quadric.hpp"

using namespace chowkit;

namespace {

BundleData ottaviani() { return BundleData::from_generator_units(builtin_base("Q5"), {2, 2, 2}); }

}  // namespace

TEST(ProjBundle, ReducesXiCubed) {
  const ProjBundleRing ring(ottaviani());
  const auto xi3 = ring.xi().pow(3);
  EXPECT_EQ(xi3.to_string(), "2*H*xi^2 - 2*H^2*xi + H^3");
  EXPECT_EQ(reduce(xi3), xi3);
}

TEST(ProjBundle, ReductionOrderIsIrrelevant) {
  const ProjBundleRing ring(ottaviani());
  EXPECT_EQ(ring.xi() * ring.xi().pow(3), ring.xi().pow(2) * ring.xi().pow(2));
  EXPECT_EQ(ring.xi().pow(2), ring.reduce({ChowClass(ring.base()), ChowClass(ring.base()), ChowClass::unit(ring.base())}));
}

TEST(ProjBundle, Pushforward) {
  const ProjBundleRing ring(ottaviani());
  EXPECT_EQ(pushforward(ring.xi().pow(2)), ChowClass::unit(ring.base()));
  EXPECT_TRUE(pushforward(ring.pullback(ChowClass::hyperplane_power(ring.base(), 2))).is_zero());
}

TEST(ProjBundle, PushforwardGivesSegreClasses) {
  for (const auto& sample : random_bundle_corpus(8, 60)) {
    const ProjBundleRing ring(sample.bundle);
    const int dim = ring.base()->dim;
    const auto s = segre_from_chern(sample.bundle, dim);
    for (int i = 0; i <= dim; ++i) {
      EXPECT_EQ(pushforward(ring.xi().pow(static_cast<unsigned>(ring.rank() - 1 + i))), s[static_cast<std::size_t>(i)]);
    }
  }
}

TEST(ProjBundle, AnticanonicalPushforwardGivesDClasses) {
  for (const auto& sample : random_bundle_corpus(9, 60)) {
    const ProjBundleRing ring(sample.bundle);
    const int dim = ring.base()->dim;
    const int r = ring.rank();
    const auto d = d_series(sample.bundle, dim);
    const Rational scale(pow(Integer(r), static_cast<unsigned long>(r - 1)));
    for (int i = 0; i <= dim; ++i) {
      EXPECT_EQ(pushforward(ring.relative_anticanonical().pow(static_cast<unsigned>(r - 1 + i))),
                scale * d[static_cast<std::size_t>(i)]);
    }
  }
}

TEST(ProjBundle, OttavianiIntersections) {
  const ProjBundleRing ring(ottaviani());
  const std::vector<Rational> expected{0, 0, 18, 108, 324, 486, 0, 0};
  for (int i = 0; i <= 7; ++i) EXPECT_EQ(anticanonical_power_degree(ring, 2, i), expected[static_cast<std::size_t>(i)]);
  EXPECT_EQ(anticanonical_power_degree(ring, 3, 6), 10206);
  EXPECT_THROW(anticanonical_power_degree(ring, 2, 8), std::invalid_argument);
  EXPECT_THROW(anticanonical_power_degree(ring, 2, -1), std::invalid_argument);
}

TEST(ProjBundle, ProductNumbers) {
  // P^2 x P5: (3 xi)^i . H^{7-i} is 9 * C(i, 2)... only i = 2 survives
  const ProjBundleRing ring(BundleData::from_generator_units(builtin_base("P5"), {0, 0, 0}));
  for (int i = 0; i <= 7; ++i) EXPECT_EQ(anticanonical_power_degree(ring, 0, i), i == 2 ? 9 : 0);
}

TEST(ProjBundle, DualPathOnCorpus) {
  for (const auto& sample : random_bundle_corpus(20260417, 120)) {
    const ProjBundleRing ring(sample.bundle);
    for (int i = 0; i <= ring.total_dim(); ++i) {
      EXPECT_EQ(anticanonical_power_degree_by_expansion(ring, sample.tau, i),
                anticanonical_power_degree_by_d_classes(ring, sample.tau, i));
    }
  }
}

TEST(ProjBundle, GrothendieckRelationVanishes) {
  for (const auto& sample : random_bundle_corpus(20260417, 120)) {
    EXPECT_TRUE(anticanonical_grothendieck_relation(ProjBundleRing(sample.bundle)).is_zero());
  }
}

TEST(ProjBundle, SignFlipIsDetected) {
  const ProjBundleRing broken(ottaviani(), GrothendieckRule::SignFlipped);
  EXPECT_FALSE(anticanonical_grothendieck_relation(broken).is_zero());
  EXPECT_THROW(anticanonical_power_degree(broken, 2, 5), ConsistencyError);
}

TEST(ProjBundle, MixedRingsRejected) {
  const ProjBundleRing a(ottaviani());
  const ProjBundleRing b(ottaviani());
  EXPECT_THROW(a.xi() + b.xi(), std::invalid_argument);
}

TEST(ProjBundle, WrongDegreeCyclesIntegrateToZero) {
  const ProjBundleRing ring(ottaviani());
  const auto h = ring.pullback(ChowClass::hyperplane_power(ring.base(), 1));
  EXPECT_EQ(integrate(ring.xi().pow(3) * h.pow(3)), 0);  // codim 6 on a 7-fold
  EXPECT_NE(integrate(ring.xi().pow(2) * h.pow(5)), 0);
}

TEST(Quadric, SymbolicEquations) {
  const auto q = QuadricBundleRing::symbolic();
  const auto tau = MultiPoly::variable("tau");
  const auto h4 = MultiPoly::variable("h4");
  const auto c2h2 = MultiPoly::variable("c2h2");
  const auto e6 = quadric_intersection(q, tau, 6, 1);
  const auto e5 = quadric_intersection(q, tau, 5, 2);
  EXPECT_EQ(e6, Rational(108) * tau * (Rational(10) * h4 * tau.pow(2) - Rational(27) * c2h2));
  EXPECT_EQ(e5, Rational(54) * (Rational(10) * h4 * tau.pow(2) - Rational(9) * c2h2));
  EXPECT_THROW(quadric_intersection(q, tau, 6, 2), std::invalid_argument);
}

TEST(Quadric, TrivialChernDataAtZeroSlope) {
  const auto p4 = builtin_base("P4");
  const auto trivial = BundleData::from_generator_units(p4, {0, 0, 0, 0, 0});
  const auto q = QuadricBundleRing::from_bundle(trivial);
  EXPECT_TRUE(quadric_intersection(q, MultiPoly::constant(0), 6, 1).is_zero());
  EXPECT_THROW(QuadricBundleRing::from_bundle(BundleData::from_generator_units(p4, {1, 0, 0, 0, 0})),
               std::invalid_argument);
  EXPECT_THROW(QuadricBundleRing::from_bundle(BundleData::from_generator_units(builtin_base("P5"), {0, 0, 0, 0, 0})),
               std::invalid_argument);
}

TEST(Quadric, Conclusion) {
  const auto v = quadric_case_conclusion(QuadricBundleRing::symbolic());
  ASSERT_EQ(v.solutions.size(), 1U);
  EXPECT_EQ(v.solutions[0].tau, 0);
  EXPECT_EQ(v.solutions[0].c2h2, 0);
  EXPECT_TRUE(v.only_trivial_solution);
  EXPECT_TRUE(v.anticanonical_top.is_zero());
  EXPECT_TRUE(v.image_dim_at_most_3);
}

TEST(Quadric, NonzeroSecondChernClassHasNoSlope) {
  const auto p4 = builtin_base("P4");
  const auto v = quadric_case_conclusion(QuadricBundleRing::from_bundle(BundleData::from_generator_units(p4, {0, 3, 0, 1, 0})));
  EXPECT_TRUE(v.solutions.empty());
  EXPECT_FALSE(v.only_trivial_solution);
}
