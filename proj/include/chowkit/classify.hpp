#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chowkit/classes.hpp"
#include "chowkit/projbundle.hpp"
#include "chowkit/slopes.hpp"

namespace chowkit {

// ---------------------------------------------------------------------------
// Integer points on 216 n d3^2 + 49 m^2 d2^3 = 0, where d_2 = d2 * Sigma and
// d_3 = d3 * P in lattice units. Every solution with d2 != 0 lies on the
// family d2 = -6 n k^2, d3 = 7 n m k^3.

struct DiophantineSolution {
  long d2 = 0;
  long d3 = 0;
  long k = 0;
  friend bool operator==(const DiophantineSolution&, const DiophantineSolution&) = default;
};

struct DiophantineResult {
  std::string base;
  long n = 0;
  long m = 0;
  long k_bound = 0;
  long d2_bound = 0;  // ceil(1.2 * 6 n K^2)
  long d3_bound = 0;  // ceil(1.2 * 7 n m K^3)
  std::vector<DiophantineSolution> solutions;     // 1 <= |k| <= K, sorted by k
  std::vector<DiophantineSolution> beyond_bound;  // in the box but |k| > K
  std::vector<std::pair<long, long>> off_family;  // solutions not of family form
  bool family_identity = false;   // the parametrization solves the equation identically
  bool envelope_complete = false; // every family point with |k| <= K fits in the box
  bool complete() const { return family_identity && envelope_complete && off_family.empty(); }
};

inline constexpr long kMaxDiophantineBound = 50;

/// Exhaustive search of the box, parallel over d2 with OpenMP. The trivial
/// point (0, 0) is excluded. Throws std::invalid_argument for K < 0 or
/// K > kMaxDiophantineBound.
DiophantineResult solve_diophantine(const CyclicChowRing& base, long k_bound);
/// Single-threaded reference for solve_diophantine.
DiophantineResult solve_diophantine_serial(const CyclicChowRing& base, long k_bound);

// ---------------------------------------------------------------------------
// Candidate bundles

/// One c1 value in the admissible window for a family parameter k.
struct ChernAttempt {
  std::string base;
  long k = 0;
  long c1 = 0;
  Rational c2;
  Rational c3;
  bool integral() const { return is_integer(c2) && is_integer(c3); }
};

/// c1 in [3k-2, 3k]; c2 = n(3 c1^2 + 6 k^2)/9 and
/// c3 = nm(7k^3 - 2 c1^3 + (9/n) c1 c2)/27 in lattice units.
/// Throws std::invalid_argument unless 0 < 2k < fano_index.
std::vector<ChernAttempt> chern_attempts(const RingRef& base, long k);

struct DimensionVerdict {
  Rational tau;
  Rational degree_i6;  // (-K + tau H)^6 . H
  Rational degree_i5;  // (-K + tau H)^5 . H^2
  bool passed() const { return degree_i6 == 0 && degree_i5 != 0; }
  /// 5 when passed, otherwise the check is inconclusive and this is -1.
  int image_dim() const { return passed() ? 5 : -1; }
};

/// Whether Y -> P(Z-coordinates) can carry a rank-3 bundle with this Chern
/// data: the integral matrix with rows (0, nY, 0), (nZ, 0, 0) and
/// (c1, -c2, c3)/(nZ mZ) must be unimodular.
struct UnimodularityVerdict {
  std::string z;
  std::array<std::array<Rational, 3>, 3> matrix{};
  Rational determinant;
  bool integral = false;
  std::string failure;  // empty when passed
  bool passed() const { return failure.empty(); }
};

struct CandidateBundle {
  RingRef base;
  long k = 0;
  Rational tau;
  long c1 = 0;
  long c2 = 0;
  long c3 = 0;

  /// "(Q5;2,2,2)"
  std::string label() const;
  BundleData bundle() const;
};

/// Integral rows of chern_attempts, each re-checked through the class
/// calculus (d_2 = -6k^2 Sigma, d_3 = 7k^3 P); a mismatch throws
/// std::logic_error.
std::vector<CandidateBundle> recover_chern(const RingRef& base, long k);

/// Evaluates both intersection numbers at tau (default: the candidate's own).
DimensionVerdict dimension_check(const CandidateBundle& candidate);
DimensionVerdict dimension_check(const CandidateBundle& candidate, const Rational& tau);

UnimodularityVerdict unimodularity_check(const CandidateBundle& candidate, const CyclicChowRing& z);

/// Cofactor expansion; exact.
Rational determinant3(const std::array<std::array<Rational, 3>, 3>& m);

// ---------------------------------------------------------------------------
// Full enumeration for 7-folds of Picard number two

struct PipelineOptions {
  long k_bound = 2;
  bool external_exclusions = true;
};

/// A known result from outside this library that removes a (candidate, Z)
/// pair. Only applied when PipelineOptions::external_exclusions is set.
struct ExternalExclusion {
  std::string candidate;
  std::string z;
  std::string flag;
  std::string statement;
};
const std::vector<ExternalExclusion>& external_exclusions();

struct CandidateRow {
  CandidateBundle candidate;
  DimensionVerdict dimension;
  std::vector<UnimodularityVerdict> unimodularity;  // one per five-dimensional Z
};

struct Survivor {
  std::string candidate;
  std::string z;
  std::optional<std::string> excluded_by;  // external flag, when applied
};

struct BettiFilterRow {
  BettiVector total;
  int fiber_dim = 0;
  BettiSolution solution;
};

struct ClassificationReport {
  int dim = 7;
  int rho = 2;
  PipelineOptions options;
  std::vector<BettiFilterRow> betti;
  std::vector<MultiPoly> slope_system;  // i = 7, i = 6
  Rational resultant_constant;
  bool quartic_has_rational_points = true;
  bool zero_a_forces_zero_slope = false;
  std::vector<DiophantineResult> diophantine;  // one per base
  std::vector<ChernAttempt> chern_attempts;
  std::vector<CandidateRow> candidates;  // sorted by (base name, k, c1)
  std::vector<Survivor> unimodular_pairs;
  /// Unimodular pairs not removed by an applied external exclusion.
  std::vector<Survivor> survivors;
  /// The tau = 0 branch of the slope system: products of two 5-folds
  /// with a P^2 factor structure are never excluded by the slope analysis.
  bool product_candidate = true;
};

/// Runs every stage for dim 7 and Picard number 2. Throws
/// std::invalid_argument for any other (dim, rho) and propagates
/// ConsistencyError from the intersection routines.
ClassificationReport run_pipeline(int dim, int rho, const PipelineOptions& options = {});

/// Rank-4 bundle with c = (2, 2, 2, 0) on Q5 at slope 2.
struct SpinorCheck {
  std::vector<Rational> profile_tau2;  // (-K + 2H)^i . H^{8-i}, i = 0..8
  std::vector<Rational> profile_tau0;  // same at tau = 0
  bool top_vanishes = false;           // i = 7, 8 vanish at tau = 2
  bool level6_nonzero = false;         // i = 6 nonzero at tau = 2
  bool non_product = false;            // (-K)^7 . H != 0
  bool passed() const { return top_vanishes && level6_nonzero && non_product; }
};
SpinorCheck spinor_consistency_check();

}  // namespace chowkit
