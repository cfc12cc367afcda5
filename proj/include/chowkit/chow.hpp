#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chowkit/rational.hpp"

namespace chowkit {

/// Rational Chow ring of a Picard-rank-one variety whose graded pieces are
/// all rank one, A^i = Z * (generator).
///
/// The lattice constants tie the generators to powers of the hyperplane class:
///   H^2 = n * Sigma,   H * Sigma = m * P,   H^dim = d * pt.
/// So in codimension i the generator is H^i / gamma_i with gamma_1 = 1,
/// gamma_2 = n, gamma_3 = n * m and gamma_dim = d. For five-dimensional bases
/// the codimension-four generator has no known scale and is not exposed.
struct CyclicChowRing {
  std::string name;
  int dim = 0;
  long n = 1;
  long m = 1;
  long d = 1;
  int fano_index = 1;
  std::vector<long> betti_even;  // b_0, b_2, ..., b_{2 dim}

  friend bool operator==(const CyclicChowRing&, const CyclicChowRing&) = default;
};

using RingRef = std::shared_ptr<const CyclicChowRing>;

/// Validates and freezes a ring description. Throws std::invalid_argument on
/// non-positive constants, a wrong Betti length, or (for dim 5) d not
/// divisible by n * m.
RingRef make_ring(CyclicChowRing ring);

/// Registry: "P1", "P4", "P5", "Q5", "KG2". Throws std::invalid_argument for
/// unknown names.
RingRef builtin_base(std::string_view name);
std::vector<std::string> builtin_base_names();
/// The rational homogeneous 5-folds of Picard number one: P5, Q5, KG2.
std::vector<RingRef> five_dimensional_bases();

/// Lattice scale gamma_codim, or std::domain_error where undefined.
Integer generator_scale(const CyclicChowRing& ring, int codim);

/// A class on the base, stored as coeffs[i] * H^i (codimension i).
class ChowClass {
 public:
  explicit ChowClass(RingRef ring);

  static ChowClass unit(RingRef ring);
  static ChowClass hyperplane_power(RingRef ring, int power, const Rational& coeff = 1);
  /// units * (generator of A^codim).
  static ChowClass from_generator_units(RingRef ring, int codim, const Rational& units);

  const RingRef& ring() const { return ring_; }
  int dim() const { return ring_->dim; }
  /// Coefficient of H^i; zero for i outside [0, dim].
  Rational coeff(int i) const;
  void set_coeff(int i, const Rational& value);

  bool is_zero() const;
  /// True when every graded piece other than `codim` vanishes.
  bool is_pure(int codim) const;

  /// Top intersection number: coeff(dim) * d.
  Rational degree() const;

  ChowClass& operator+=(const ChowClass& rhs);
  ChowClass& operator-=(const ChowClass& rhs);
  ChowClass& operator*=(const Rational& scalar);
  ChowClass pow(unsigned exponent) const;

  friend ChowClass operator+(ChowClass lhs, const ChowClass& rhs) { return lhs += rhs; }
  friend ChowClass operator-(ChowClass lhs, const ChowClass& rhs) { return lhs -= rhs; }
  friend ChowClass operator-(ChowClass x) { return x *= -1; }
  friend ChowClass operator*(ChowClass lhs, const Rational& rhs) { return lhs *= rhs; }
  friend ChowClass operator*(const Rational& lhs, ChowClass rhs) { return rhs *= lhs; }
  /// Graded product truncated above the top codimension.
  friend ChowClass operator*(const ChowClass& lhs, const ChowClass& rhs);
  friend bool operator==(const ChowClass& lhs, const ChowClass& rhs);

  /// e.g. "2*H^2 - H^3"; "0" for zero.
  std::string to_string() const;

 private:
  void check_same_ring(const ChowClass& other) const;

  RingRef ring_;
  std::vector<Rational> coeffs_;
};

ChowClass class_mul(const ChowClass& x, const ChowClass& y);
Rational degree(const ChowClass& x);

/// Coordinate of a pure class against the lattice generator of A^codim.
struct LatticeCoordinate {
  Rational value;
  bool integral() const { return is_integer(value); }
};

/// Throws std::invalid_argument if x is not pure of that codimension and
/// std::domain_error for codim 4 on a five-dimensional base.
LatticeCoordinate in_generator_units(const ChowClass& x, int codim);

// ---------------------------------------------------------------------------
// Betti numbers of smooth fibrations. Vectors hold even Betti numbers only
// (odd ones vanish for everything handled here).

using BettiVector = std::vector<long>;

enum class FiberKind { ProjectiveSpace, OddQuadric, EvenQuadric };

/// Betti numbers of a smooth fibration with fibre P^s or an odd-dimensional
/// quadric Q^s: b_{2i}(X) = sum_{j=0}^{s} b_{2i-2j}(Y). Even quadrics (two
/// middle classes) throw std::invalid_argument.
BettiVector betti_of_fibration(const BettiVector& base, int fiber_dim, FiberKind kind);
BettiVector betti_of_fibration(const CyclicChowRing& base, int fiber_dim, FiberKind kind);

/// Why a solved base Betti vector cannot belong to a smooth projective
/// variety. Degrees are real cohomological degrees (b_4 means index 2).
struct BettiInfeasibility {
  BettiVector solved;  // may be empty when deconvolution itself failed
  std::string violated;
  int lower_degree = 0;
  int upper_degree = 0;
  long lower_value = 0;
  long upper_value = 0;
};

using BettiSolution = std::variant<BettiVector, BettiInfeasibility>;

/// Inverts betti_of_fibration for a projective-space fibre of the given
/// dimension, then checks non-negativity, Poincare symmetry and the hard
/// Lefschetz monotonicity b_0 <= b_2 <= ... up to the middle degree.
BettiSolution solve_base_betti(const BettiVector& total, int fiber_dim);

}  // namespace chowkit
