#include "chowkit/classes.hpp"

#include <stdexcept>
#include <string>

namespace chowkit {

BundleData::BundleData(RingRef ring_in, int rank_in, std::vector<ChowClass> chern_in)
    : ring(std::move(ring_in)), rank(rank_in), chern(std::move(chern_in)) {
  if (!ring) throw std::invalid_argument("bundle needs a base ring");
  if (rank < 1) throw std::invalid_argument("bundle rank must be at least 1");
  if (chern.size() != static_cast<std::size_t>(rank)) {
    throw std::invalid_argument("expected " + std::to_string(rank) + " Chern classes, got " +
                                std::to_string(chern.size()));
  }
  for (int i = 1; i <= rank; ++i) {
    const auto& ci = chern[static_cast<std::size_t>(i - 1)];
    if (!(*ci.ring() == *ring)) throw std::invalid_argument("Chern class on a different ring");
    if (!ci.is_pure(i)) throw std::invalid_argument("c_" + std::to_string(i) + " is not pure of codimension " + std::to_string(i));
  }
}

BundleData BundleData::from_generator_units(RingRef ring, const std::vector<Integer>& units) {
  std::vector<ChowClass> chern;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const int codim = static_cast<int>(i) + 1;
    if (codim > ring->dim || units[i] == 0) {
      chern.emplace_back(ring);
      continue;
    }
    chern.push_back(ChowClass::from_generator_units(ring, codim, Rational(units[i])));
  }
  return BundleData(ring, static_cast<int>(units.size()), std::move(chern));
}

ChowClass BundleData::c(int i) const {
  if (i == 0) return ChowClass::unit(ring);
  if (i < 0 || i > rank) return ChowClass(ring);
  return chern[static_cast<std::size_t>(i - 1)];
}

namespace {

void check_index(const RingRef& ring, int max_index) {
  if (max_index < 0 || max_index > ring->dim) {
    throw std::invalid_argument("series index must lie in [0, dim(base)]");
  }
}

ClassSeries chern_series(const BundleData& bundle, int max_index) {
  ClassSeries c{bundle.ring, {}};
  for (int i = 0; i <= max_index; ++i) c.terms.push_back(bundle.c(i));
  return c;
}

}  // namespace

ClassSeries invert_series(const ClassSeries& series, int max_index) {
  check_index(series.ring, max_index);
  if (series.terms.empty() || !(series.terms[0] == ChowClass::unit(series.ring))) {
    throw std::invalid_argument("series inversion needs constant term 1");
  }
  auto term = [&](int i) {
    return i < static_cast<int>(series.size()) ? series[static_cast<std::size_t>(i)] : ChowClass(series.ring);
  };
  ClassSeries inverse{series.ring, {ChowClass::unit(series.ring)}};
  for (int i = 1; i <= max_index; ++i) {
    ChowClass acc(series.ring);
    for (int j = 1; j <= i; ++j) acc += term(j) * inverse.terms[static_cast<std::size_t>(i - j)];
    inverse.terms.push_back(-acc);
  }
  return inverse;
}

ClassSeries multiply_series(const ClassSeries& lhs, const ClassSeries& rhs, int max_index) {
  check_index(lhs.ring, max_index);
  ClassSeries out{lhs.ring, {}};
  for (int i = 0; i <= max_index; ++i) {
    ChowClass acc(lhs.ring);
    for (int j = 0; j <= i; ++j) {
      if (j < static_cast<int>(lhs.size()) && i - j < static_cast<int>(rhs.size())) {
        acc += lhs[static_cast<std::size_t>(j)] * rhs[static_cast<std::size_t>(i - j)];
      }
    }
    out.terms.push_back(std::move(acc));
  }
  return out;
}

ClassSeries alternate_signs(ClassSeries series) {
  for (std::size_t i = 1; i < series.terms.size(); i += 2) series.terms[i] = -series.terms[i];
  return series;
}

ClassSeries segre_from_chern(const BundleData& bundle, int max_index) {
  check_index(bundle.ring, max_index);
  return alternate_signs(invert_series(chern_series(bundle, max_index), max_index));
}

ClassSeries chern_from_segre(const ClassSeries& segre, int max_index) {
  return invert_series(alternate_signs(segre), max_index);
}

ClassSeries d_series(const BundleData& bundle, int max_index) {
  check_index(bundle.ring, max_index);
  const auto s = segre_from_chern(bundle, max_index);
  const long r = bundle.rank;
  const ChowClass minus_s1 = max_index >= 1 ? -s[1] : ChowClass(bundle.ring);

  ClassSeries d{bundle.ring, {}};
  for (int i = 0; i <= max_index; ++i) {
    ChowClass acc(bundle.ring);
    for (int j = 0; j <= i; ++j) {
      const Rational weight(binomial(r - 1 + i, r - 1 + j) * chowkit::pow(Integer(r), static_cast<unsigned long>(j)));
      acc += weight * (s[static_cast<std::size_t>(j)] * minus_s1.pow(static_cast<unsigned>(i - j)));
    }
    d.terms.push_back(std::move(acc));
  }
  return d;
}

ClassSeries delta_series(const BundleData& bundle, int max_index) {
  return invert_series(alternate_signs(d_series(bundle, max_index)), max_index);
}

ChowClass delta_closed_form(const BundleData& bundle, int i) {
  if (i < 0) throw std::invalid_argument("negative index");
  const long r = bundle.rank;
  if (i > r) return ChowClass(bundle.ring);
  const ChowClass c1 = bundle.c(1);
  ChowClass acc(bundle.ring);
  for (int k = 0; k <= i; ++k) {
    Rational weight(binomial(r - k, i - k) * chowkit::pow(Integer(r), static_cast<unsigned long>(k)));
    if ((i - k) % 2 != 0) weight = -weight;
    acc += weight * (bundle.c(k) * c1.pow(static_cast<unsigned>(i - k)));
  }
  return acc;
}

LowRankReductionReport verify_low_rank_reductions(const BundleData& bundle) {
  if (bundle.rank != 3) throw std::invalid_argument("low-rank reductions are stated for rank 3");
  if (bundle.ring->dim < 5) throw std::invalid_argument("low-rank reductions need a base of dimension >= 5");
  const auto d = d_series(bundle, 5);
  LowRankReductionReport report{false, d[4] - d[2] * d[2], d[5] - Rational(2) * (d[2] * d[3])};
  report.passed = report.residual_d4.is_zero() && report.residual_d5.is_zero();
  return report;
}

}  // namespace chowkit
