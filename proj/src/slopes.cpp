#include "chowkit/slopes.hpp"

#include <stdexcept>

#include "chowkit/resultant.hpp"
#include "chowkit/roots.hpp"

namespace chowkit {

namespace {

const MultiPoly& tau_var() {
  static const MultiPoly tau = MultiPoly::variable("tau");
  return tau;
}

// sum_k C(i, i-k) alpha_{k+1-r} tau^{i-k}
MultiPoly vanishing_condition(const std::vector<MultiPoly>& alpha, int rank, int i) {
  MultiPoly p;
  for (int k = 0; k <= i; ++k) {
    const int j = k + 1 - rank;
    if (j < 0 || j >= static_cast<int>(alpha.size())) continue;
    p += Rational(binomial(i, i - k)) * (alpha[static_cast<std::size_t>(j)] * tau_var().pow(static_cast<unsigned>(i - k)));
  }
  return p;
}

SlopeSystem assemble(RingRef base, int rank, int dim_bound, bool symbolic, const std::vector<MultiPoly>& alpha) {
  const int n = base->dim + rank - 1;
  if (dim_bound < 0 || dim_bound >= n) {
    throw std::invalid_argument("dim_bound must lie in [0, n): the system would be empty");
  }
  SlopeSystem sys{std::move(base), rank, dim_bound, n, symbolic, {}, {}};
  for (int i = n; i > dim_bound; --i) {
    sys.indices.push_back(i);
    sys.polys.push_back(vanishing_condition(alpha, rank, i));
  }
  return sys;
}

}  // namespace

std::vector<MultiPoly> symbolic_rank3_d_coefficients(int max_index) {
  const auto a = MultiPoly::variable("a");
  const auto b = MultiPoly::variable("b");
  std::vector<MultiPoly> d{MultiPoly::constant(1), MultiPoly(), a, b};
  d.resize(static_cast<std::size_t>(std::max(max_index, 3)) + 1);

  // D_i = (-1)^i d_i are the coefficients of d_{-t}; Delta = D^{-1}.
  auto signed_d = [&](int i) { return i % 2 == 0 ? d[static_cast<std::size_t>(i)] : -d[static_cast<std::size_t>(i)]; };
  std::vector<MultiPoly> delta{MultiPoly::constant(1)};
  for (int i = 1; i < static_cast<int>(d.size()); ++i) {
    MultiPoly acc;
    for (int j = 1; j < i; ++j) acc += signed_d(j) * delta[static_cast<std::size_t>(i - j)];
    if (i <= 3) {
      delta.push_back(-(acc + signed_d(i)));
    } else {
      // Delta_i = 0 determines d_i.
      const MultiPoly di = -acc;
      d[static_cast<std::size_t>(i)] = i % 2 == 0 ? di : -di;
      delta.emplace_back();
    }
  }
  d.resize(static_cast<std::size_t>(max_index) + 1);
  return d;
}

SlopeSystem build_slope_system(RingRef base, int rank, int dim_bound) {
  if (rank != 3) throw std::invalid_argument("the symbolic (a, b) slope system exists for rank 3 only");
  if (base->dim < 3) throw std::invalid_argument("the symbolic slope system needs a base of dimension >= 3");
  const int dim = base->dim;
  return assemble(std::move(base), rank, dim_bound, true, symbolic_rank3_d_coefficients(dim));
}

SlopeSystem build_slope_system(const BundleData& bundle, int dim_bound) {
  const int dim = bundle.ring->dim;
  const auto d = d_series(bundle, dim);
  std::vector<MultiPoly> alpha;
  for (int j = 0; j <= dim; ++j) alpha.push_back(MultiPoly::constant(d[static_cast<std::size_t>(j)].coeff(j)));
  return assemble(bundle.ring, bundle.rank, dim_bound, false, alpha);
}

std::vector<MultiPoly> resultant_factors() {
  const auto a = MultiPoly::variable("a", {"a", "b"});
  const auto b = MultiPoly::variable("b", {"a", "b"});
  return {
      a,
      Rational(216) * b.pow(2) + Rational(49) * a.pow(3),
      Rational(250047) * b.pow(4) - Rational(222804) * a.pow(3) * b.pow(2) + Rational(132496) * a.pow(6),
  };
}

ResultantCondition resultant_condition(const SlopeSystem& system) {
  if (system.polys.size() != 2) throw std::invalid_argument("the resultant needs exactly two slope equations");
  ResultantCondition out{sylvester_resultant(system.polys[0], system.polys[1], "tau"), std::nullopt};
  if (system.symbolic && system.base->dim == 5) {
    std::optional<MultiPoly> quotient = out.resultant;
    for (const auto& factor : resultant_factors()) {
      quotient = divide_exact(*quotient, factor);
      if (!quotient) break;
    }
    if (quotient) out.factor_constant = quotient->as_constant();
  }
  return out;
}

bool slope_in_range(const SlopeRoot& root, const CyclicChowRing& base) {
  return root.tau >= 0 && root.tau < base.fano_index;
}

FamilyAnalysis analyze_family_roots(long k) {
  if (k == 0) throw std::invalid_argument("the family parameter k must be nonzero");
  const auto sys = build_slope_system(make_ring({"generic5", 5, 1, 1, 1, 6, {}}), 3, 5);
  const Rational kk(k);
  auto specialize = [&](const MultiPoly& p) {
    return p.substitute("a", Rational(-6) * kk * kk).substitute("b", Rational(7) * kk * kk * kk).compacted();
  };

  FamilyAnalysis out;
  out.k = k;
  out.f = specialize(sys.polys[0]);
  out.g = specialize(sys.polys[1]);

  const auto& t = tau_var();
  const auto c = [](const Rational& v) { return MultiPoly::constant(v); };
  const auto f_factor = (t - c(2 * kk)).pow(2) * (t + c(kk)) * (t.pow(2) + c(3 * kk) * t - c(kk * kk));
  const auto g_factor = (t - c(2 * kk)) *
                        (Rational(5) * t.pow(3) + c(10 * kk) * t.pow(2) - c(10 * kk * kk) * t - c(6 * kk * kk * kk));

  auto leading_after_division = [&](const MultiPoly& p, const MultiPoly& factor, const char* name) {
    const auto division = divide(p, factor, "tau");
    const auto lead = division.quotient.as_constant();
    if (!division.exact() || !lead) {
      throw std::logic_error(std::string("factorization of ") + name + " failed at k = " + std::to_string(k) +
                             ": remainder " + division.remainder.to_string());
    }
    return *lead;
  };
  out.f_leading = leading_after_division(out.f, f_factor, "f");
  out.g_leading = leading_after_division(out.g, g_factor, "g");

  out.gcd = univariate_gcd(out.f, out.g, "tau");
  if (!(out.gcd == t - c(2 * kk))) {
    throw std::logic_error("gcd of the specialized system is " + out.gcd.to_string() + ", expected tau - 2k");
  }
  out.root = SlopeRoot{2 * kk, 1, k};
  return out;
}

QuarticFactorTest quartic_factor_rationality() {
  // 250047 b^4 - 222804 a^3 b^2 + 132496 a^6 = a^6 (250047 u^2 - 222804 u + 132496)
  const Integer p = 250047, q = -222804, r = 132496;
  QuarticFactorTest out;
  out.discriminant = q * q - 4 * p * r;
  out.rational_u_roots = rational_roots(MultiPoly::univariate("u", {Rational(r), Rational(q), Rational(p)}));
  // u = b^2 / a^3 must additionally come from rational a, b; with no
  // rational u at all there is nothing further to test.
  out.has_rational_points = !out.rational_u_roots.empty();
  return out;
}

ZeroATest zero_a_forces_zero_slope() {
  const auto sys = build_slope_system(make_ring({"generic5", 5, 1, 1, 1, 6, {}}), 3, 5);
  const auto f0 = sys.polys[0].substitute("a", Rational(0)).compacted();
  const auto g0 = sys.polys[1].substitute("a", Rational(0)).compacted();
  // f0 = tau^2 (21 tau^3 + 21 b), g0 = tau (15 tau^3 + 6 b)
  const auto t = tau_var();
  const auto f1 = divide(f0, t.pow(2), "tau");
  const auto g1 = divide(g0, t, "tau");
  if (!f1.exact() || !g1.exact()) throw std::logic_error("a = 0 specialization lost its tau factors");

  ZeroATest out;
  out.reduced_resultant = sylvester_resultant(f1.quotient, g1.quotient, "tau").compacted();
  // A common nonzero tau needs the resultant (a polynomial in b) to vanish.
  // It is a monomial in b, so only b = 0 qualifies, and then both reduced
  // equations are pure powers of tau.
  const bool monomial_in_b = out.reduced_resultant.terms().size() == 1 && !out.reduced_resultant.is_zero();
  const auto f_at_b0 = f1.quotient.substitute("b", Rational(0)).compacted();
  const auto g_at_b0 = g1.quotient.substitute("b", Rational(0)).compacted();
  const bool only_zero_root = rational_roots(f_at_b0) == std::vector<Rational>{0} &&
                              rational_roots(g_at_b0) == std::vector<Rational>{0} &&
                              f_at_b0.terms().size() == 1 && g_at_b0.terms().size() == 1;
  out.forces_tau_zero = monomial_in_b && only_zero_root;
  return out;
}

}  // namespace chowkit
