#include <gtest/gtest.h>

#include "chowkit/classes.hpp"
#include "chowkit/corpus.hpp"

using namespace chowkit;

namespace {

BundleData ottaviani() { return BundleData::from_generator_units(builtin_base("Q5"), {2, 2, 2}); }

ChowClass h(const RingRef& ring, int power, const Rational& c = 1) { return ChowClass::hyperplane_power(ring, power, c); }

}  // namespace

TEST(BundleData, Validation) {
  const auto q5 = builtin_base("Q5");
  EXPECT_THROW(BundleData(q5, 0, {}), std::invalid_argument);
  EXPECT_THROW(BundleData(q5, 2, {h(q5, 1)}), std::invalid_argument);
  EXPECT_THROW(BundleData(q5, 1, {h(q5, 2)}), std::invalid_argument);
  const auto b = ottaviani();
  EXPECT_EQ(b.c(0), ChowClass::unit(q5));
  EXPECT_EQ(b.c(2), h(q5, 2, 2));
  EXPECT_EQ(b.c(3), h(q5, 3));  // 2 P = H^3 on Q5
  EXPECT_TRUE(b.c(4).is_zero());
}

TEST(Segre, LineBundleIsGeometric) {
  const auto p5 = builtin_base("P5");
  const auto s = segre_from_chern(BundleData::from_generator_units(p5, {3}), 5);
  for (int i = 0; i <= 5; ++i) EXPECT_EQ(s[static_cast<std::size_t>(i)], h(p5, i, pow(Rational(3), i)));
}

TEST(Segre, Ottaviani) {
  const auto q5 = builtin_base("Q5");
  const auto s = segre_from_chern(ottaviani(), 3);
  EXPECT_EQ(s[1], h(q5, 1, 2));
  EXPECT_EQ(s[2], h(q5, 2, 2));
  EXPECT_EQ(in_generator_units(s[3], 3).value, 2);
}

TEST(Segre, TrivialBundle) {
  const auto s = segre_from_chern(BundleData::from_generator_units(builtin_base("KG2"), {0, 0, 0}), 5);
  EXPECT_EQ(s[0], ChowClass::unit(builtin_base("KG2")));
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_TRUE(s[i].is_zero());
}

TEST(DClasses, Ottaviani) {
  const auto q5 = builtin_base("Q5");
  const auto d = d_series(ottaviani(), 5);
  EXPECT_EQ(d[0], ChowClass::unit(q5));
  EXPECT_TRUE(d[1].is_zero());
  EXPECT_EQ(d[2], h(q5, 2, -6));
  EXPECT_EQ(d[3], h(q5, 3, 7));
  EXPECT_EQ(in_generator_units(d[3], 3).value, 14);
  EXPECT_EQ(d[4], h(q5, 4, 36));
  EXPECT_EQ(d[5], h(q5, 5, -84));
}

TEST(DClasses, RankTwoTracelessBundle) {
  const auto p5 = builtin_base("P5");
  const auto b = BundleData::from_generator_units(p5, {0, 3});
  EXPECT_EQ(d_series(b, 2)[2], Rational(-4) * b.c(2));
}

TEST(DClasses, LowDegreeClosedForms) {
  for (const auto& sample : random_bundle_corpus(99, 60)) {
    const auto& b = sample.bundle;
    if (b.rank < 3 || b.ring->dim < 3) continue;
    const Rational r(b.rank);
    const auto d = d_series(b, 3);
    const auto c1 = b.c(1);
    EXPECT_EQ(d[2], (r * (r - 1) / 2) * c1 * c1 - r * r * b.c(2));
    // rank-3 closed forms: d_2 = 3c1^2 - 9c2, d_3 = 2c1^3 - 9c1c2 + 27c3
    if (b.rank == 3) {
      EXPECT_EQ(d[3], Rational(2) * c1.pow(3) - Rational(9) * c1 * b.c(2) + Rational(27) * b.c(3));
    }
  }
}

TEST(DeltaClasses, LowIndexIdentities) {
  for (const auto& sample : random_bundle_corpus(5, 48)) {
    const auto& b = sample.bundle;
    if (b.ring->dim < 5) continue;
    const auto d = d_series(b, 5);
    const auto delta = delta_series(b, 5);
    EXPECT_EQ(delta[0], ChowClass::unit(b.ring));
    EXPECT_TRUE(delta[1].is_zero());
    EXPECT_EQ(delta[2], -d[2]);
    EXPECT_EQ(delta[3], d[3]);
    EXPECT_EQ(delta[4], -d[4] + d[2] * d[2]);
    EXPECT_EQ(delta[5], d[5] - Rational(2) * d[2] * d[3]);
  }
}

TEST(DeltaClasses, TrivialAndClosedForm) {
  const auto trivial = BundleData::from_generator_units(builtin_base("P5"), {0, 0});
  const auto delta = delta_series(trivial, 5);
  for (std::size_t i = 1; i < delta.size(); ++i) EXPECT_TRUE(delta[i].is_zero());

  const auto b = ottaviani();
  EXPECT_EQ(delta_closed_form(b, 0), ChowClass::unit(b.ring));
  EXPECT_TRUE(delta_closed_form(b, 4).is_zero());
  EXPECT_EQ(delta_closed_form(b, 2), h(b.ring, 2, 6));
  EXPECT_EQ(delta_closed_form(b, 2), delta_series(b, 2)[2]);
}

TEST(DeltaClasses, SeriesProductIsOne) {
  for (const auto& sample : random_bundle_corpus(17, 40)) {
    const auto& b = sample.bundle;
    const int dim = b.ring->dim;
    const auto product = multiply_series(alternate_signs(d_series(b, dim)), delta_series(b, dim), dim);
    EXPECT_EQ(product[0], ChowClass::unit(b.ring));
    for (std::size_t i = 1; i < product.size(); ++i) EXPECT_TRUE(product[i].is_zero());
  }
}

TEST(Classes, RandomizedCorpusProperties) {
  const auto corpus = random_bundle_corpus(20260417, 120);
  ASSERT_EQ(corpus.size(), 120U);
  for (const auto& sample : corpus) {
    const auto& b = sample.bundle;
    const int dim = b.ring->dim;
    const auto delta = delta_series(b, dim);
    const auto back = chern_from_segre(segre_from_chern(b, dim), dim);
    const auto d = d_series(b, dim);
    EXPECT_EQ(d[0], ChowClass::unit(b.ring));
    EXPECT_TRUE(d[1].is_zero());
    for (int i = 0; i <= dim; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      EXPECT_EQ(delta[idx], delta_closed_form(b, i));
      if (i > b.rank) EXPECT_TRUE(delta[idx].is_zero());
      EXPECT_EQ(back[idx], b.c(i));
    }
  }
}

TEST(LowRank, Reductions) {
  const auto report = verify_low_rank_reductions(ottaviani());
  EXPECT_TRUE(report.passed);
  EXPECT_TRUE(report.residual_d4.is_zero());
  EXPECT_TRUE(verify_low_rank_reductions(BundleData::from_generator_units(builtin_base("P5"), {0, 0, 0})).passed);
  std::size_t checked = 0;
  for (const auto& sample : random_bundle_corpus(41, 600)) {
    if (sample.bundle.rank != 3 || sample.bundle.ring->dim < 5) continue;
    EXPECT_TRUE(verify_low_rank_reductions(sample.bundle).passed);
    ++checked;
  }
  EXPECT_GE(checked, 100U);
  EXPECT_THROW(verify_low_rank_reductions(BundleData::from_generator_units(builtin_base("P5"), {1, 1})),
               std::invalid_argument);
  EXPECT_THROW(verify_low_rank_reductions(BundleData::from_generator_units(builtin_base("P4"), {1, 1, 1})),
               std::invalid_argument);
}

TEST(Series, IndexBounds) {
  EXPECT_THROW(d_series(ottaviani(), 6), std::invalid_argument);
  EXPECT_THROW(segre_from_chern(ottaviani(), -1), std::invalid_argument);
}
