#include "chowkit/projbundle.hpp"

#include <sstream>

namespace chowkit {

struct ProjBundleRing::State {
  BundleData bundle;
  GrothendieckRule rule;
  // xi^r = sum_{i=1}^{r} relation[i-1] * xi^{r-i}
  std::vector<ChowClass> relation;
};

ProjBundleRing::ProjBundleRing(BundleData bundle, GrothendieckRule rule) {
  std::vector<ChowClass> relation;
  for (int i = 1; i <= bundle.rank; ++i) {
    auto term = bundle.c(i);
    if (i % 2 == 0) term = -term;
    if (rule == GrothendieckRule::SignFlipped) term = -term;
    relation.push_back(std::move(term));
  }
  state_ = std::make_shared<const State>(State{std::move(bundle), rule, std::move(relation)});
}

const BundleData& ProjBundleRing::bundle() const { return state_->bundle; }
const RingRef& ProjBundleRing::base() const { return state_->bundle.ring; }
int ProjBundleRing::rank() const { return state_->bundle.rank; }
int ProjBundleRing::total_dim() const { return base()->dim + rank() - 1; }
GrothendieckRule ProjBundleRing::rule() const { return state_->rule; }

ProjBundleElement ProjBundleRing::reduce(std::vector<ChowClass> xi_coeffs) const {
  const auto r = static_cast<std::size_t>(rank());
  for (std::size_t e = xi_coeffs.size(); e-- > r;) {
    const ChowClass top = xi_coeffs[e];
    if (top.is_zero()) continue;
    for (std::size_t i = 1; i <= r; ++i) xi_coeffs[e - i] += state_->relation[i - 1] * top;
  }
  xi_coeffs.resize(r, ChowClass(base()));
  return ProjBundleElement(*this, std::move(xi_coeffs));
}

ProjBundleElement ProjBundleRing::zero() const { return reduce({}); }

ProjBundleElement ProjBundleRing::one() const { return pullback(ChowClass::unit(base())); }

ProjBundleElement ProjBundleRing::xi() const {
  return reduce({ChowClass(base()), ChowClass::unit(base())});
}

ProjBundleElement ProjBundleRing::pullback(const ChowClass& x) const { return reduce({x}); }

ProjBundleElement ProjBundleRing::relative_anticanonical() const {
  return Rational(rank()) * xi() - pullback(bundle().c(1));
}

ProjBundleElement::ProjBundleElement(ProjBundleRing ring, std::vector<ChowClass> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

bool ProjBundleElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

namespace {

void check_same_ring(const ProjBundleRing& lhs, const ProjBundleRing& rhs) {
  if (!(lhs == rhs)) throw std::invalid_argument("elements of different projective bundle rings");
}

}  // namespace

ProjBundleElement& ProjBundleElement::operator+=(const ProjBundleElement& rhs) {
  check_same_ring(ring_, rhs.ring_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

ProjBundleElement& ProjBundleElement::operator-=(const ProjBundleElement& rhs) {
  check_same_ring(ring_, rhs.ring_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

ProjBundleElement& ProjBundleElement::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

ProjBundleElement operator*(const ProjBundleElement& lhs, const ProjBundleElement& rhs) {
  check_same_ring(lhs.ring_, rhs.ring_);
  const auto r = lhs.coeffs_.size();
  std::vector<ChowClass> product(2 * r - 1, ChowClass(lhs.ring_.base()));
  for (std::size_t i = 0; i < r; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < r; ++j) product[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return lhs.ring_.reduce(std::move(product));
}

ProjBundleElement ProjBundleElement::pow(unsigned exponent) const {
  ProjBundleElement result = ring_.one();
  ProjBundleElement base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool operator==(const ProjBundleElement& lhs, const ProjBundleElement& rhs) {
  return lhs.ring_ == rhs.ring_ && lhs.coeffs_ == rhs.coeffs_;
}

std::string ProjBundleElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    const auto& c = coeffs_[j];
    for (int i = 0; i <= c.dim(); ++i) {
      const Rational coeff = c.coeff(i);
      if (coeff == 0) continue;
      const bool negative = coeff < 0;
      const Rational magnitude = negative ? Rational(-coeff) : coeff;
      if (first) {
        if (negative) out << '-';
      } else {
        out << (negative ? " - " : " + ");
      }
      first = false;
      std::string monomial;
      if (i > 0) monomial = i == 1 ? "H" : "H^" + std::to_string(i);
      if (j > 0) {
        if (!monomial.empty()) monomial += '*';
        monomial += j == 1 ? "xi" : "xi^" + std::to_string(j);
      }
      if (monomial.empty()) {
        out << chowkit::to_string(magnitude);
      } else {
        if (magnitude != 1) out << chowkit::to_string(magnitude) << '*';
        out << monomial;
      }
    }
  }
  return first ? "0" : out.str();
}

ProjBundleElement reduce(const ProjBundleElement& e) { return e.ring().reduce(e.coeffs()); }

ChowClass pushforward(const ProjBundleElement& e) { return e.coeffs().back(); }

Rational integrate(const ProjBundleElement& e) { return pushforward(e).degree(); }

namespace {

void check_power(const ProjBundleRing& ring, int i) {
  if (i < 0 || i > ring.total_dim()) {
    throw std::invalid_argument("power must lie in [0, " + std::to_string(ring.total_dim()) + "]");
  }
}

}  // namespace

Rational anticanonical_power_degree_by_expansion(const ProjBundleRing& ring, const Rational& tau, int i) {
  check_power(ring, i);
  const int n = ring.total_dim();
  const auto h = ChowClass::hyperplane_power(ring.base(), 1);
  const auto divisor = ring.relative_anticanonical() + tau * ring.pullback(h);
  const auto cycle = divisor.pow(static_cast<unsigned>(i)) * ring.pullback(h.pow(static_cast<unsigned>(n - i)));
  return integrate(cycle);
}

Rational anticanonical_power_degree_by_d_classes(const ProjBundleRing& ring, const Rational& tau, int i) {
  check_power(ring, i);
  const auto& bundle = ring.bundle();
  const int r = bundle.rank;
  const int n = ring.total_dim();
  const int dim = ring.base()->dim;
  const auto d = d_series(bundle, dim);

  ChowClass sum(ring.base());
  for (int k = 0; k <= i; ++k) {
    const int j = k + 1 - r;
    if (j < 0 || j > dim) continue;
    const Rational weight = Rational(binomial(i, i - k)) * chowkit::pow(tau, static_cast<unsigned long>(i - k));
    sum += weight * (d[static_cast<std::size_t>(j)] * ChowClass::hyperplane_power(ring.base(), n - k));
  }
  return Rational(chowkit::pow(Integer(r), static_cast<unsigned long>(r - 1))) * sum.degree();
}

Rational anticanonical_power_degree(const ProjBundleRing& ring, const Rational& tau, int i) {
  const Rational expanded = anticanonical_power_degree_by_expansion(ring, tau, i);
  const Rational formula = anticanonical_power_degree_by_d_classes(ring, tau, i);
  if (expanded != formula) {
    throw ConsistencyError("(-K + " + to_string(tau) + "H)^" + std::to_string(i) + ": ring expansion gives " +
                           to_string(expanded) + " but the d-class formula gives " + to_string(formula));
  }
  return expanded;
}

ProjBundleElement anticanonical_grothendieck_relation(const ProjBundleRing& ring) {
  const int r = ring.rank();
  const auto delta = delta_series(ring.bundle(), ring.base()->dim);
  const auto minus_k = ring.relative_anticanonical();
  auto total = ring.zero();
  for (int i = 0; i <= r; ++i) {
    const ChowClass delta_i = i < static_cast<int>(delta.size()) ? delta[static_cast<std::size_t>(i)] : ChowClass(ring.base());
    auto term = minus_k.pow(static_cast<unsigned>(r - i)) * ring.pullback(delta_i);
    if (i % 2 != 0) term *= -1;
    total += term;
  }
  return total;
}

}  // namespace chowkit
