#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "chowkit/classes.hpp"

namespace chowkit {

/// Raised when two independent evaluation routes disagree. This always
/// indicates a sign or normalization bug, never bad user input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Which relation the tautological class satisfies. `SignFlipped` negates
/// every lower-order term and exists only so that tests and the self-check
/// can prove that the checks catch a broken Grothendieck rule.
enum class GrothendieckRule { Standard, SignFlipped };

class ProjBundleElement;

/// Chow ring of P(E) (rank-one quotients) over a cyclic base:
///   A*(P(E)) = A*(Y)[xi] / (sum_{i=0}^{r} (-1)^i c_i xi^{r-i}),
/// with pi_*(xi^{r-1+i}) = s_i(E). Cheap to copy; copies share state.
class ProjBundleRing {
 public:
  explicit ProjBundleRing(BundleData bundle, GrothendieckRule rule = GrothendieckRule::Standard);

  const BundleData& bundle() const;
  const RingRef& base() const;
  int rank() const;
  /// dim(base) + rank - 1
  int total_dim() const;
  GrothendieckRule rule() const;

  ProjBundleElement zero() const;
  ProjBundleElement one() const;
  ProjBundleElement xi() const;
  ProjBundleElement pullback(const ChowClass& x) const;
  /// -K_pi = r xi - pi^* c_1(E)
  ProjBundleElement relative_anticanonical() const;

  /// Canonical form of sum_j xi_coeffs[j] * xi^j for any number of terms.
  ProjBundleElement reduce(std::vector<ChowClass> xi_coeffs) const;

  friend bool operator==(const ProjBundleRing& lhs, const ProjBundleRing& rhs) {
    return lhs.state_ == rhs.state_;
  }

 private:
  struct State;
  std::shared_ptr<const State> state_;
};

/// Element of A*(P(E)): sum_{j<r} coeffs[j] xi^j, always fully reduced.
class ProjBundleElement {
 public:
  const ProjBundleRing& ring() const { return ring_; }
  const std::vector<ChowClass>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  ProjBundleElement& operator+=(const ProjBundleElement& rhs);
  ProjBundleElement& operator-=(const ProjBundleElement& rhs);
  ProjBundleElement& operator*=(const Rational& scalar);
  ProjBundleElement pow(unsigned exponent) const;

  friend ProjBundleElement operator+(ProjBundleElement lhs, const ProjBundleElement& rhs) { return lhs += rhs; }
  friend ProjBundleElement operator-(ProjBundleElement lhs, const ProjBundleElement& rhs) { return lhs -= rhs; }
  friend ProjBundleElement operator*(ProjBundleElement lhs, const Rational& rhs) { return lhs *= rhs; }
  friend ProjBundleElement operator*(const Rational& lhs, ProjBundleElement rhs) { return rhs *= lhs; }
  friend ProjBundleElement operator*(const ProjBundleElement& lhs, const ProjBundleElement& rhs);
  friend bool operator==(const ProjBundleElement& lhs, const ProjBundleElement& rhs);

  /// e.g. "2*H*xi^2 - 2*H^2*xi + H^3"
  std::string to_string() const;

 private:
  friend class ProjBundleRing;
  ProjBundleElement(ProjBundleRing ring, std::vector<ChowClass> coeffs);

  ProjBundleRing ring_;
  std::vector<ChowClass> coeffs_;
};

/// Elements are kept reduced, so this is the identity; it exists to name the
/// operation in tests and reports.
ProjBundleElement reduce(const ProjBundleElement& e);

/// pi_*: the coefficient of xi^{r-1}.
ChowClass pushforward(const ProjBundleElement& e);

/// Degree of the zero-cycle part: degree(pi_* e).
Rational integrate(const ProjBundleElement& e);

/// (-K_pi + tau pi^*H)^i . pi^*H^{n-i} by expanding in the ring.
Rational anticanonical_power_degree_by_expansion(const ProjBundleRing& ring, const Rational& tau, int i);

/// The same number from the d-classes:
///   r^{r-1} sum_k C(i, i-k) d_{k+1-r} tau^{i-k} H^{n-k}.
Rational anticanonical_power_degree_by_d_classes(const ProjBundleRing& ring, const Rational& tau, int i);

/// Evaluates both routes and throws ConsistencyError if they differ.
/// Throws std::invalid_argument unless 0 <= i <= total_dim.
Rational anticanonical_power_degree(const ProjBundleRing& ring, const Rational& tau, int i);

/// sum_{i=0}^{r} (-1)^i (-K_pi)^{r-i} pi^* Delta_i(E); zero for a correct ring.
ProjBundleElement anticanonical_grothendieck_relation(const ProjBundleRing& ring);

}  // namespace chowkit
