#include "chowkit/quadric.hpp"

#include <stdexcept>

#include "chowkit/roots.hpp"

namespace chowkit {

namespace {

// Internal polynomial variables: xi and the base classes H, c_2, c_4.
constexpr const char* kXi = "xi";
constexpr const char* kH = "H";
constexpr const char* kC2 = "C2";
constexpr const char* kC4 = "C4";

}  // namespace

QuadricBundleRing QuadricBundleRing::symbolic() { return QuadricBundleRing{}; }

QuadricBundleRing QuadricBundleRing::from_bundle(const BundleData& bundle) {
  if (bundle.ring->dim != 4) throw std::invalid_argument("quadric fibrations are handled over 4-dimensional bases");
  if (bundle.rank != 5) throw std::invalid_argument("the ambient bundle of a Q^3-fibration has rank 5");
  for (int i : {1, 3, 5}) {
    if (!bundle.c(i).is_zero()) throw std::invalid_argument("a self-dual bundle has vanishing odd Chern classes");
  }
  QuadricBundleRing q;
  q.bundle_ = bundle;
  return q;
}

std::vector<std::pair<std::string, Rational>> QuadricBundleRing::degree_values() const {
  if (!bundle_) return {};
  const auto h = ChowClass::hyperplane_power(bundle_->ring, 1);
  const auto c2 = bundle_->c(2);
  return {{"h4", h.pow(4).degree()},
          {"c2h2", (c2 * h.pow(2)).degree()},
          {"c2c2", (c2 * c2).degree()},
          {"c4", bundle_->c(4).degree()}};
}

MultiPoly quadric_intersection(const QuadricBundleRing& q, const MultiPoly& tau, int i, int h_power) {
  if (i < 0 || h_power < 0 || i + h_power + 1 != kQuadricAmbientDim) {
    throw std::invalid_argument("need i + h_power + 1 == 8 on P(E) over a 4-fold");
  }
  const auto xi = MultiPoly::variable(kXi);
  const auto h = MultiPoly::variable(kH);
  const auto relation = xi.pow(5) + MultiPoly::variable(kC2) * xi.pow(3) + MultiPoly::variable(kC4) * xi;

  const auto cycle = (Rational(3) * xi + tau * h).pow(static_cast<unsigned>(i)) *
                     h.pow(static_cast<unsigned>(h_power)) * (Rational(2) * xi);
  const auto pushed = divide(cycle, relation, kXi).remainder.coefficient_in(kXi, 4);

  // Keep the codimension-4 part of the base class and name its degree.
  const auto& vars = pushed.variables();
  auto position = [&](const char* name) -> long {
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (vars[k] == name) return static_cast<long>(k);
    }
    return -1;
  };
  const long ih = position(kH);
  const long ic2 = position(kC2);
  const long ic4 = position(kC4);
  auto exponent = [](const Exponents& e, long idx) { return idx < 0 ? 0U : e[static_cast<std::size_t>(idx)]; };

  MultiPoly result;
  for (const auto& [exps, coeff] : pushed.terms()) {
    const unsigned eh = exponent(exps, ih);
    const unsigned ec2 = exponent(exps, ic2);
    const unsigned ec4 = exponent(exps, ic4);
    if (eh + 2 * ec2 + 4 * ec4 != 4) continue;
    const char* symbol = ec4 == 1 ? "c4" : ec2 == 2 ? "c2c2" : ec2 == 1 ? "c2h2" : "h4";
    auto rest = exps;
    for (long idx : {ih, ic2, ic4}) {
      if (idx >= 0) rest[static_cast<std::size_t>(idx)] = 0;
    }
    MultiPoly term(vars);
    term.add_term(std::move(rest), coeff);
    result += term * MultiPoly::variable(symbol);
  }
  result = result.compacted();
  for (const auto& [name, value] : q.degree_values()) result = result.substitute(name, value);
  return result.compacted();
}

QuadricVerdict quadric_case_conclusion(const QuadricBundleRing& q) {
  const auto tau = MultiPoly::variable("tau");
  QuadricVerdict verdict{quadric_intersection(q, tau, 6, 1), quadric_intersection(q, tau, 5, 2), {}, false, {}, false, {}};

  if (!q.bundle()) {
    // H^4 > 0 and both equations are homogeneous in (h4, c2h2): set h4 = 1.
    const auto e6 = verdict.equation_i6.substitute("h4", Rational(1));
    const auto e5 = verdict.equation_i5.substitute("h4", Rational(1));
    if (e5.degree_in("c2h2") != 1) throw std::logic_error("expected an equation linear in c2h2");
    const auto slope = e5.coefficient_in("c2h2", 1).as_constant();
    if (!slope || *slope == 0) throw std::logic_error("expected a constant c2h2 coefficient");
    const auto c2h2_of_tau = e5.coefficient_in("c2h2", 0) * (Rational(-1) / *slope);
    const auto reduced = e6.substitute("c2h2", c2h2_of_tau).compacted();
    if (reduced.is_zero()) throw std::logic_error("the two slope equations are dependent");
    for (const auto& root : rational_roots(reduced)) {
      verdict.solutions.push_back({root, c2h2_of_tau.substitute("tau", root).constant_term()});
    }
  } else {
    const auto g = univariate_gcd(verdict.equation_i6, verdict.equation_i5, "tau");
    if (g.degree_in("tau") > 0) {
      Rational c2h2 = 0;
      for (const auto& [name, value] : q.degree_values()) {
        if (name == "c2h2") c2h2 = value;
      }
      for (const auto& root : rational_roots(g)) verdict.solutions.push_back({root, c2h2});
    } else if (g.is_zero()) {
      throw std::logic_error("both slope equations vanish identically");
    }
  }

  verdict.only_trivial_solution =
      verdict.solutions.size() == 1 && verdict.solutions[0].tau == 0 && verdict.solutions[0].c2h2 == 0;

  verdict.anticanonical_top = quadric_intersection(q, MultiPoly::constant(0), 4, 3).substitute("c2h2", Rational(0));
  verdict.image_dim_at_most_3 = verdict.anticanonical_top.is_zero();

  if (verdict.solutions.empty()) {
    verdict.summary = "no common slope: the two vanishing conditions are incompatible";
  } else if (verdict.only_trivial_solution) {
    verdict.summary = verdict.image_dim_at_most_3
                          ? "tau = 0 and c2*H^2 = 0; (-K)^4.H^3 = 0 so dim Z <= 3, contradicting dim Z = 4"
                          : "tau = 0 and c2*H^2 = 0; (-K)^4.H^3 != 0";
  } else {
    verdict.summary = "unexpected nontrivial slope solutions";
  }
  return verdict;
}

}  // namespace chowkit
