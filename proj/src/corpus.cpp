#include "chowkit/corpus.hpp"

#include <random>

namespace chowkit {

std::vector<CorpusSample> random_bundle_corpus(std::uint64_t seed, std::size_t count) {
  const std::vector<RingRef> bases{builtin_base("P5"), builtin_base("Q5"), builtin_base("KG2"), builtin_base("P4")};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> unit(-5, 5);
  std::uniform_int_distribution<int> numerator(-6, 6);
  std::uniform_int_distribution<int> denominator(1, 3);

  std::vector<CorpusSample> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    const auto& ring = bases[s % bases.size()];
    const int rank = 1 + static_cast<int>(s % 6);
    std::vector<ChowClass> chern;
    for (int i = 1; i <= rank; ++i) {
      const Rational u(unit(rng));
      if (i > ring->dim || u == 0) {
        chern.emplace_back(ring);
      } else if (i == 4 && ring->dim == 5) {
        chern.push_back(ChowClass::hyperplane_power(ring, 4, u));
      } else {
        chern.push_back(ChowClass::from_generator_units(ring, i, u));
      }
    }
    const Rational tau = make_rational(numerator(rng), denominator(rng));
    out.push_back({BundleData(ring, rank, std::move(chern)), tau});
  }
  return out;
}

}  // namespace chowkit
