#pragma once

#include <cstdint>
#include <vector>

#include "chowkit/classes.hpp"

namespace chowkit {

struct CorpusSample {
  BundleData bundle;
  Rational tau;
};

/// Deterministic pseudo-random bundles: bases cycle through P5, Q5, KG2 and
/// P4, ranks through 1..6, and each c_i is a uniform integer in [-5, 5]
/// times the lattice generator (times H^4 in codimension 4 on 5-folds).
/// Slopes are p/q with |p| <= 6 and 1 <= q <= 3.
std::vector<CorpusSample> random_bundle_corpus(std::uint64_t seed, std::size_t count);

}  // namespace chowkit
