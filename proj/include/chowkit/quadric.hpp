#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chowkit/classes.hpp"
#include "chowkit/multipoly.hpp"

namespace chowkit {

/// A relative quadric X in |2 xi| inside P(E), for a self-dual rank-5 bundle E
/// on a 4-dimensional base. Self-duality kills the odd Chern classes, so the
/// ambient ring has xi^5 + c_2 xi^3 + c_4 xi = 0, and -K_pi = 3 xi on X.
///
/// Intersection numbers come out as polynomials in the symbols
///   tau, h4 = H^4, c2h2 = c_2 H^2, c2c2 = c_2^2, c4 = c_4
/// (degrees on the base). With a concrete bundle the degree symbols are
/// replaced by numbers.
class QuadricBundleRing {
 public:
  /// Chern data left symbolic.
  static QuadricBundleRing symbolic();
  /// Throws std::invalid_argument unless the base is 4-dimensional, the
  /// rank is 5 and c_1 = c_3 = c_5 = 0.
  static QuadricBundleRing from_bundle(const BundleData& bundle);

  const std::optional<BundleData>& bundle() const { return bundle_; }
  /// Degree symbol values for a concrete bundle; empty when symbolic.
  std::vector<std::pair<std::string, Rational>> degree_values() const;

 private:
  std::optional<BundleData> bundle_;
};

inline constexpr int kQuadricAmbientDim = 8;

/// (3 xi + tau H)^i . H^h_power . [X] evaluated in the ambient ring, with
/// [X] = 2 xi. `tau` may be a number or the symbol "tau".
/// Throws std::invalid_argument unless i + h_power + 1 == 8.
MultiPoly quadric_intersection(const QuadricBundleRing& q, const MultiPoly& tau, int i, int h_power);

struct QuadricSolution {
  Rational tau;
  Rational c2h2;
};

struct QuadricVerdict {
  MultiPoly equation_i6;  // (3xi + tau H)^6 H . 2xi
  MultiPoly equation_i5;  // (3xi + tau H)^5 H^2 . 2xi
  /// Common solutions (tau, c_2 H^2) with H^4 > 0 normalized to 1 in the
  /// symbolic case; for a concrete bundle c2h2 is fixed.
  std::vector<QuadricSolution> solutions;
  bool only_trivial_solution = false;  // exactly {(0, 0)}
  MultiPoly anticanonical_top;  // (-K_pi)^4 . H^3 on X after substitution
  bool image_dim_at_most_3 = false;
  std::string summary;
};

/// Solves the two vanishing conditions for the slope and then checks that
/// (-K_pi)^4 . pi^*H^3 vanishes, which bounds the contraction target by 3.
QuadricVerdict quadric_case_conclusion(const QuadricBundleRing& q);

}  // namespace chowkit
