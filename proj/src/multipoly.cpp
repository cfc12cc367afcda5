#include "chowkit/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chowkit {

bool GrlexGreater::operator()(const Exponents& lhs, const Exponents& rhs) const {
  const auto lhs_deg = std::accumulate(lhs.begin(), lhs.end(), 0UL);
  const auto rhs_deg = std::accumulate(rhs.begin(), rhs.end(), 0UL);
  if (lhs_deg != rhs_deg) return lhs_deg > rhs_deg;
  return std::lexicographical_compare(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

namespace {

MultiPoly::TermMap remap(const MultiPoly::TermMap& terms, const std::vector<std::string>& from,
                         const std::vector<std::string>& to) {
  if (from == to) return terms;
  std::vector<std::size_t> target(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    const auto it = std::find(to.begin(), to.end(), from[i]);
    target[i] = static_cast<std::size_t>(it - to.begin());
  }
  MultiPoly::TermMap out;
  for (const auto& [exps, coeff] : terms) {
    Exponents mapped(to.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (target[i] == to.size()) {
        throw std::invalid_argument("variable '" + from[i] + "' missing from target universe");
      }
      mapped[target[i]] = exps[i];
    }
    out.emplace(std::move(mapped), coeff);
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {
  auto sorted = variables_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate variable name in polynomial universe");
  }
}

MultiPoly MultiPoly::constant(const Rational& value, std::vector<std::string> variables) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.variables_.size(), 0), value);
  return p;
}

MultiPoly MultiPoly::variable(std::string_view name, std::vector<std::string> variables) {
  if (std::find(variables.begin(), variables.end(), name) == variables.end()) {
    variables.emplace_back(name);
  }
  MultiPoly p(std::move(variables));
  Exponents exps(p.variables_.size(), 0);
  exps[*p.index_of(name)] = 1;
  p.add_term(std::move(exps), 1);
  return p;
}

MultiPoly MultiPoly::univariate(std::string_view var, const std::vector<Rational>& coeffs) {
  MultiPoly p({std::string(var)});
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    p.add_term({static_cast<unsigned>(i)}, coeffs[i]);
  }
  return p;
}

std::optional<std::size_t> MultiPoly::index_of(std::string_view var) const {
  const auto it = std::find(variables_.begin(), variables_.end(), var);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

std::vector<std::string> MultiPoly::unify(const std::vector<std::string>& lhs,
                                          const std::vector<std::string>& rhs) {
  auto out = lhs;
  for (const auto& v : rhs) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

std::optional<Rational> MultiPoly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() > 1) return std::nullopt;
  const auto& [exps, coeff] = *terms_.begin();
  if (std::any_of(exps.begin(), exps.end(), [](unsigned e) { return e != 0; })) return std::nullopt;
  return coeff;
}

Rational MultiPoly::constant_term() const {
  const auto it = terms_.find(Exponents(variables_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(Exponents exps, const Rational& coeff) {
  if (exps.size() != variables_.size()) {
    throw std::invalid_argument("exponent vector does not match the variable universe");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(exps), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::degree_in(std::string_view var) const {
  if (terms_.empty()) return -1;
  const auto idx = index_of(var);
  if (!idx) return 0;
  unsigned deg = 0;
  for (const auto& [exps, coeff] : terms_) deg = std::max(deg, exps[*idx]);
  return static_cast<int>(deg);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& lead = terms_.begin()->first;
  return static_cast<int>(std::accumulate(lead.begin(), lead.end(), 0U));
}

std::vector<std::string> MultiPoly::used_variables() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const bool used = std::any_of(terms_.begin(), terms_.end(),
                                  [i](const auto& term) { return term.first[i] != 0; });
    if (used) out.push_back(variables_[i]);
  }
  return out;
}

MultiPoly MultiPoly::coefficient_in(std::string_view var, unsigned power) const {
  MultiPoly out(variables_);
  const auto idx = index_of(var);
  for (const auto& [exps, coeff] : terms_) {
    const unsigned e = idx ? exps[*idx] : 0;
    if (e != power) continue;
    auto stripped = exps;
    if (idx) stripped[*idx] = 0;
    out.terms_.emplace(std::move(stripped), coeff);
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::string_view var) const {
  std::vector<MultiPoly> out;
  const int deg = degree_in(var);
  for (int p = 0; p <= deg; ++p) out.push_back(coefficient_in(var, static_cast<unsigned>(p)));
  return out;
}

MultiPoly MultiPoly::substitute(std::string_view var, const MultiPoly& value) const {
  if (!index_of(var)) return *this;
  MultiPoly result(unify(variables_, value.variables_));
  MultiPoly power = MultiPoly::constant(1, result.variables_);
  const auto coeffs = coefficients_in(var);
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    if (p > 0) power *= value;
    if (!coeffs[p].is_zero()) result += coeffs[p] * power;
  }
  return result;
}

MultiPoly MultiPoly::substitute(std::string_view var, const Rational& value) const {
  return substitute(var, MultiPoly::constant(value));
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational, std::less<>>& values) const {
  Rational total = 0;
  for (const auto& [exps, coeff] : terms_) {
    Rational term = coeff;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      const auto it = values.find(variables_[i]);
      if (it == values.end()) {
        throw std::invalid_argument("no value for variable '" + variables_[i] + "'");
      }
      term *= chowkit::pow(it->second, exps[i]);
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::with_variables(std::vector<std::string> universe) const {
  MultiPoly out(std::move(universe));
  out.terms_ = remap(terms_, variables_, out.variables_);
  return out;
}

MultiPoly MultiPoly::compacted() const { return with_variables(used_variables()); }

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = MultiPoly::constant(1, variables_);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [exps, coeff] : out.terms_) coeff = -coeff;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (variables_ != rhs.variables_) {
    auto universe = unify(variables_, rhs.variables_);
    if (universe != variables_) {
      terms_ = remap(terms_, variables_, universe);
      variables_ = std::move(universe);
    }
    for (auto& [exps, coeff] : remap(rhs.terms_, rhs.variables_, variables_)) add_term(exps, coeff);
    return *this;
  }
  for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, coeff);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  const auto universe = MultiPoly::unify(lhs.variables_, rhs.variables_);
  const auto left = remap(lhs.terms_, lhs.variables_, universe);
  const auto right = remap(rhs.terms_, rhs.variables_, universe);
  MultiPoly out(universe);
  Exponents exps(universe.size());
  for (const auto& [le, lc] : left) {
    for (const auto& [re, rc] : right) {
      for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = le[i] + re[i];
      out.add_term(exps, lc * rc);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, coeff] : terms_) coeff *= scalar;
  return *this;
}

bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.variables_ == rhs.variables_) return lhs.terms_ == rhs.terms_;
  const auto universe = MultiPoly::unify(lhs.variables_, rhs.variables_);
  return remap(lhs.terms_, lhs.variables_, universe) == remap(rhs.terms_, rhs.variables_, universe);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exps, coeff] : terms_) {
    std::string monomial;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += variables_[i];
      if (exps[i] > 1) monomial += '^' + std::to_string(exps[i]);
    }
    const bool negative = coeff < 0;
    const Rational magnitude = negative ? Rational(-coeff) : coeff;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (monomial.empty()) {
      out << chowkit::to_string(magnitude);
    } else if (magnitude == 1) {
      out << monomial;
    } else {
      out << chowkit::to_string(magnitude) << '*' << monomial;
    }
  }
  return out.str();
}

Rational MultiPoly::coefficient_of(
    std::initializer_list<std::pair<std::string_view, unsigned>> monomial) const {
  Exponents exps(variables_.size(), 0);
  for (const auto& [name, power] : monomial) {
    const auto idx = index_of(name);
    if (!idx) {
      if (power == 0) continue;
      return 0;
    }
    exps[*idx] = power;
  }
  const auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

DivisionResult divide(const MultiPoly& dividend, const MultiPoly& divisor, std::string_view var) {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  const int divisor_deg = divisor.degree_in(var);
  const auto lead = divisor.coefficient_in(var, static_cast<unsigned>(divisor_deg)).as_constant();
  if (!lead) {
    throw std::invalid_argument("divisor leading coefficient in '" + std::string(var) +
                                "' is not a rational constant");
  }
  const Rational inv_lead = 1 / *lead;
  const auto x = MultiPoly::variable(var);

  DivisionResult result{MultiPoly(dividend.variables()), dividend};
  while (!result.remainder.is_zero()) {
    const int deg = result.remainder.degree_in(var);
    if (deg < divisor_deg) break;
    auto term = result.remainder.coefficient_in(var, static_cast<unsigned>(deg)) * inv_lead;
    if (deg > divisor_deg) term *= x.pow(static_cast<unsigned>(deg - divisor_deg));
    result.quotient += term;
    result.remainder -= term * divisor;
  }
  return result;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& dividend, const MultiPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (dividend.is_zero()) return MultiPoly(dividend.variables());

  const auto universe = [&] {
    auto u = dividend.variables();
    for (const auto& v : divisor.variables()) {
      if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
    }
    return u;
  }();
  auto remainder = dividend.with_variables(universe);
  const auto d = divisor.with_variables(universe);
  const auto& [lead_exps, lead_coeff] = *d.terms().begin();

  MultiPoly quotient(universe);
  while (!remainder.is_zero()) {
    const auto& [exps, coeff] = *remainder.terms().begin();
    Exponents shift(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < lead_exps[i]) return std::nullopt;
      shift[i] = exps[i] - lead_exps[i];
    }
    MultiPoly term(universe);
    term.add_term(std::move(shift), coeff / lead_coeff);
    quotient += term;
    remainder -= term * d;
  }
  return quotient;
}

}  // namespace chowkit
