#include "chowkit/chow.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace chowkit {

RingRef make_ring(CyclicChowRing ring) {
  if (ring.dim <= 0) throw std::invalid_argument("base dimension must be positive");
  if (ring.n <= 0 || ring.m <= 0 || ring.d <= 0 || ring.fano_index <= 0) {
    throw std::invalid_argument("lattice constants and Fano index must be positive");
  }
  if (ring.betti_even.empty()) ring.betti_even.assign(static_cast<std::size_t>(ring.dim) + 1, 1);
  if (ring.betti_even.size() != static_cast<std::size_t>(ring.dim) + 1) {
    throw std::invalid_argument("betti_even must have dim + 1 entries");
  }
  if (ring.dim == 5 && ring.d % (ring.n * ring.m) != 0) {
    throw std::invalid_argument("d must be divisible by n * m on a five-dimensional base");
  }
  return std::make_shared<const CyclicChowRing>(std::move(ring));
}

namespace {

const std::map<std::string, RingRef, std::less<>>& registry() {
  static const auto* table = new std::map<std::string, RingRef, std::less<>>{
      {"P1", make_ring({"P1", 1, 1, 1, 1, 2, {}})},
      {"P4", make_ring({"P4", 4, 1, 1, 1, 5, {}})},
      {"P5", make_ring({"P5", 5, 1, 1, 1, 6, {}})},
      {"Q5", make_ring({"Q5", 5, 1, 2, 2, 5, {}})},
      {"KG2", make_ring({"KG2", 5, 3, 2, 18, 3, {}})},
  };
  return *table;
}

}  // namespace

RingRef builtin_base(std::string_view name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown base '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> builtin_base_names() { return {"P1", "P4", "P5", "Q5", "KG2"}; }

std::vector<RingRef> five_dimensional_bases() {
  return {builtin_base("P5"), builtin_base("Q5"), builtin_base("KG2")};
}

Integer generator_scale(const CyclicChowRing& ring, int codim) {
  if (codim < 0 || codim > ring.dim) throw std::domain_error("codimension out of range");
  if (codim == ring.dim) return ring.d;
  switch (codim) {
    case 0:
    case 1:
      return 1;
    case 2:
      return ring.n;
    case 3:
      return Integer(ring.n) * ring.m;
    default:
      throw std::domain_error("no lattice generator scale in codimension " + std::to_string(codim) +
                              " on " + ring.name);
  }
}

// ---------------------------------------------------------------------------

ChowClass::ChowClass(RingRef ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("ChowClass needs a ring");
  coeffs_.assign(static_cast<std::size_t>(ring_->dim) + 1, Rational(0));
}

ChowClass ChowClass::unit(RingRef ring) { return hyperplane_power(std::move(ring), 0); }

ChowClass ChowClass::hyperplane_power(RingRef ring, int power, const Rational& coeff) {
  ChowClass x(std::move(ring));
  x.set_coeff(power, coeff);
  return x;
}

ChowClass ChowClass::from_generator_units(RingRef ring, int codim, const Rational& units) {
  const Integer scale = generator_scale(*ring, codim);
  return hyperplane_power(std::move(ring), codim, units / Rational(scale));
}

Rational ChowClass::coeff(int i) const {
  if (i < 0 || i > dim()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

void ChowClass::set_coeff(int i, const Rational& value) {
  if (i < 0) throw std::invalid_argument("negative codimension");
  if (i > dim()) return;  // truncated
  coeffs_[static_cast<std::size_t>(i)] = value;
}

bool ChowClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool ChowClass::is_pure(int codim) const {
  for (int i = 0; i <= dim(); ++i) {
    if (i != codim && coeffs_[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

Rational ChowClass::degree() const { return coeffs_.back() * ring_->d; }

void ChowClass::check_same_ring(const ChowClass& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) {
    throw std::invalid_argument("classes live on different rings (" + ring_->name + " vs " +
                                other.ring_->name + ")");
  }
}

ChowClass& ChowClass::operator+=(const ChowClass& rhs) {
  check_same_ring(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& rhs) {
  check_same_ring(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

ChowClass& ChowClass::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

ChowClass operator*(const ChowClass& lhs, const ChowClass& rhs) {
  lhs.check_same_ring(rhs);
  ChowClass out(lhs.ring_);
  const auto n = lhs.coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return out;
}

ChowClass ChowClass::pow(unsigned exponent) const {
  ChowClass result = unit(ring_);
  for (unsigned e = 0; e < exponent; ++e) result = result * *this;
  return result;
}

bool operator==(const ChowClass& lhs, const ChowClass& rhs) {
  return *lhs.ring_ == *rhs.ring_ && lhs.coeffs_ == rhs.coeffs_;
}

std::string ChowClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= dim(); ++i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << chowkit::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out << chowkit::to_string(magnitude) << '*';
    out << 'H';
    if (i > 1) out << '^' << i;
  }
  return first ? "0" : out.str();
}

ChowClass class_mul(const ChowClass& x, const ChowClass& y) { return x * y; }

Rational degree(const ChowClass& x) { return x.degree(); }

LatticeCoordinate in_generator_units(const ChowClass& x, int codim) {
  if (!x.is_pure(codim)) {
    throw std::invalid_argument("class " + x.to_string() + " is not pure of codimension " +
                                std::to_string(codim));
  }
  return {x.coeff(codim) * Rational(generator_scale(*x.ring(), codim))};
}

// ---------------------------------------------------------------------------

BettiVector betti_of_fibration(const BettiVector& base, int fiber_dim, FiberKind kind) {
  if (kind == FiberKind::EvenQuadric) {
    throw std::invalid_argument("even-dimensional quadric fibres are not supported");
  }
  if (fiber_dim < 0) throw std::invalid_argument("fibre dimension must be non-negative");
  const auto s = static_cast<std::size_t>(fiber_dim);
  BettiVector total(base.size() + s, 0);
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = 0; j <= s; ++j) total[i + j] += base[i];
  }
  return total;
}

BettiVector betti_of_fibration(const CyclicChowRing& base, int fiber_dim, FiberKind kind) {
  return betti_of_fibration(base.betti_even, fiber_dim, kind);
}

BettiSolution solve_base_betti(const BettiVector& total, int fiber_dim) {
  if (fiber_dim < 0) throw std::invalid_argument("fibre dimension must be non-negative");
  const long total_dim = static_cast<long>(total.size()) - 1;
  const long base_dim = total_dim - fiber_dim;
  if (base_dim < 0) {
    return BettiInfeasibility{{}, "fibre dimension exceeds total dimension", 0, 0, 0, 0};
  }

  BettiVector base(static_cast<std::size_t>(base_dim) + 1, 0);
  for (long i = 0; i <= base_dim; ++i) {
    long value = total[static_cast<std::size_t>(i)];
    for (long j = 1; j <= std::min<long>(fiber_dim, i); ++j) value -= base[static_cast<std::size_t>(i - j)];
    base[static_cast<std::size_t>(i)] = value;
  }
  for (long i = base_dim + 1; i <= total_dim; ++i) {
    long expected = 0;
    for (long j = 0; j <= fiber_dim; ++j) {
      if (i - j >= 0 && i - j <= base_dim) expected += base[static_cast<std::size_t>(i - j)];
    }
    if (expected != total[static_cast<std::size_t>(i)]) {
      return BettiInfeasibility{base, "total Betti vector is not a fibration convolution",
                                static_cast<int>(2 * i), static_cast<int>(2 * i), expected,
                                total[static_cast<std::size_t>(i)]};
    }
  }

  for (long i = 0; i <= base_dim; ++i) {
    const long b = base[static_cast<std::size_t>(i)];
    if (b < 0) {
      return BettiInfeasibility{base, "b_" + std::to_string(2 * i) + " >= 0", static_cast<int>(2 * i),
                                static_cast<int>(2 * i), b, b};
    }
  }
  for (long i = 0; i + 1 <= base_dim / 2; ++i) {
    const long lo = base[static_cast<std::size_t>(i)];
    const long hi = base[static_cast<std::size_t>(i + 1)];
    if (lo > hi) {
      return BettiInfeasibility{base,
                                "hard Lefschetz: b_" + std::to_string(2 * i) + " <= b_" + std::to_string(2 * i + 2),
                                static_cast<int>(2 * i), static_cast<int>(2 * i + 2), lo, hi};
    }
  }
  for (long i = 0; i <= base_dim; ++i) {
    const long lo = base[static_cast<std::size_t>(i)];
    const long hi = base[static_cast<std::size_t>(base_dim - i)];
    if (lo != hi) {
      return BettiInfeasibility{base,
                                "Poincare duality: b_" + std::to_string(2 * i) + " = b_" +
                                    std::to_string(2 * (base_dim - i)),
                                static_cast<int>(2 * i), static_cast<int>(2 * (base_dim - i)), lo, hi};
    }
  }
  return base;
}

}  // namespace chowkit
