#pragma once

#include <optional>
#include <vector>

#include "chowkit/classes.hpp"
#include "chowkit/multipoly.hpp"

namespace chowkit {

/// Vanishing conditions on the slope tau of a Fano bundle.
///
/// If -K_pi + tau pi^*H contracts P(E) onto something of dimension at most
/// dim_bound, then for every dim_bound < i <= n
///   sum_k C(i, i-k) d_{k+1-r} H^{n-k} tau^{i-k} = 0.
/// Each polynomial is that degree divided by deg(H^dim), so that it only
/// involves the H-coefficients of the d-classes. Polynomials are stored for
/// i = n, n-1, ..., dim_bound + 1 in that order.
struct SlopeSystem {
  RingRef base;
  int rank = 0;
  int dim_bound = 0;
  int total_dim = 0;
  bool symbolic = false;  // coefficients in Q[a, b] with d_2 = a H^2, d_3 = b H^3
  std::vector<int> indices;
  std::vector<MultiPoly> polys;  // in "tau" (and "a", "b" when symbolic)
};

/// H-coefficients of d_0 .. d_max_index for a rank-3 bundle, as polynomials
/// in a and b. Higher classes follow from Delta_i = 0 for i > 3, e.g.
/// d_4 = a^2 and d_5 = 2ab.
std::vector<MultiPoly> symbolic_rank3_d_coefficients(int max_index);

/// Symbolic system for rank 3. Throws std::invalid_argument for other ranks
/// or if dim_bound >= n (no condition left).
SlopeSystem build_slope_system(RingRef base, int rank, int dim_bound);

/// Numeric system from a concrete bundle.
SlopeSystem build_slope_system(const BundleData& bundle, int dim_bound);

/// a, 216 b^2 + 49 a^3, 250047 b^4 - 222804 a^3 b^2 + 132496 a^6
std::vector<MultiPoly> resultant_factors();

struct ResultantCondition {
  MultiPoly resultant;
  /// For the symbolic rank-3 system on a 5-fold: resultant / (product of
  /// resultant_factors()) when every division is exact and leaves a constant.
  std::optional<Rational> factor_constant;
};

/// Resultant in tau of the two polynomials of a two-equation system.
/// Throws std::invalid_argument if the system does not have exactly two.
ResultantCondition resultant_condition(const SlopeSystem& system);

struct SlopeRoot {
  Rational tau;
  int multiplicity = 1;
  std::optional<long> k;
};

/// 0 <= tau < fano_index(base)
bool slope_in_range(const SlopeRoot& root, const CyclicChowRing& base);

struct FamilyAnalysis {
  long k = 0;
  MultiPoly f;    // i = 7 condition at a = -6k^2, b = 7k^3
  MultiPoly g;    // i = 6 condition
  MultiPoly gcd;  // monic gcd in tau
  Rational f_leading;  // f = f_leading (tau-2k)^2 (tau+k)(tau^2+3k tau-k^2)
  Rational g_leading;  // g = g_leading (tau-2k)(5tau^3+10k tau^2-10k^2 tau-6k^3)
  SlopeRoot root;
};

/// Specializes the rank-3 system on a 5-fold to a = -6k^2, b = 7k^3 and
/// verifies the two factorizations by exact division. The common root is
/// tau = 2k. Throws std::invalid_argument for k = 0 and std::logic_error if
/// a factorization leaves a remainder.
FamilyAnalysis analyze_family_roots(long k);

/// The quartic factor as a quadratic in u = b^2 / a^3.
struct QuarticFactorTest {
  Integer discriminant;
  std::vector<Rational> rational_u_roots;
  /// True when some rational (a, b) with a != 0 makes the quartic vanish.
  bool has_rational_points = false;
};
QuarticFactorTest quartic_factor_rationality();

/// With a = 0 the system only admits tau = 0.
struct ZeroATest {
  MultiPoly reduced_resultant;  // in b, after removing the tau = 0 roots
  bool forces_tau_zero = false;
};
ZeroATest zero_a_forces_zero_slope();

}  // namespace chowkit
