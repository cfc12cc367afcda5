#include "chowkit/classify.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <tuple>

#include <omp.h>

#include "chowkit/roots.hpp"

namespace chowkit {

namespace {

long ceil_div(long num, long den) { return (num + den - 1) / den; }

DiophantineResult prepare(const CyclicChowRing& base, long k_bound) {
  if (k_bound < 0 || k_bound > kMaxDiophantineBound) {
    throw std::invalid_argument("k_bound must lie in [0, " + std::to_string(kMaxDiophantineBound) + "]");
  }
  DiophantineResult r;
  r.base = base.name;
  r.n = base.n;
  r.m = base.m;
  r.k_bound = k_bound;
  // 1.2 * x = 6x / 5
  r.d2_bound = ceil_div(6 * 6 * base.n * k_bound * k_bound, 5);
  r.d3_bound = ceil_div(6 * 7 * base.n * base.m * k_bound * k_bound * k_bound, 5);

  const auto k = MultiPoly::variable("k", {"k", "n", "m"});
  const auto n = MultiPoly::variable("n", {"k", "n", "m"});
  const auto m = MultiPoly::variable("m", {"k", "n", "m"});
  const auto d2 = Rational(-6) * n * k.pow(2);
  const auto d3 = Rational(7) * n * m * k.pow(3);
  r.family_identity = (Rational(216) * n * d3.pow(2) + Rational(49) * m.pow(2) * d2.pow(3)).is_zero();

  r.envelope_complete = 6 * base.n * k_bound * k_bound <= r.d2_bound &&
                        7 * base.n * base.m * k_bound * k_bound * k_bound <= r.d3_bound;
  return r;
}

struct RowHits {
  std::vector<DiophantineSolution> family;
  std::vector<std::pair<long, long>> off_family;
};

// All d3 in the box with 216 n d3^2 + 49 m^2 d2^3 = 0 for one d2 != 0.
void search_row(const DiophantineResult& r, long d2, RowHits& hits) {
  const Integer num = Integer(-49) * r.m * r.m * Integer(d2) * d2 * d2;
  const Integer den = Integer(216) * r.n;
  if (num <= 0 || num % den != 0) return;
  const Integer square = num / den;
  if (!is_perfect_square(square)) return;
  const Integer root = isqrt(square);
  if (root > r.d3_bound) return;

  const long s = root.get_si();
  for (const long d3 : {-s, s}) {
    // Family test: d2 = -6 n k^2 and d3 = 7 n m k^3.
    bool on_family = false;
    long k = 0;
    if ((-d2) % (6 * r.n) == 0) {
      const Integer k2 = Integer(-d2 / (6 * r.n));
      if (is_perfect_square(k2)) {
        k = isqrt(k2).get_si();
        if (d3 < 0) k = -k;
        on_family = Integer(d3) == Integer(7) * r.n * r.m * k * k * k;
      }
    }
    if (on_family) {
      hits.family.push_back({d2, d3, k});
    } else {
      hits.off_family.emplace_back(d2, d3);
    }
  }
}

void finish(DiophantineResult& r, RowHits hits) {
  for (const auto& s : hits.family) {
    const long abs_k = s.k < 0 ? -s.k : s.k;
    (abs_k <= r.k_bound ? r.solutions : r.beyond_bound).push_back(s);
  }
  auto by_k = [](const DiophantineSolution& a, const DiophantineSolution& b) { return a.k < b.k; };
  std::sort(r.solutions.begin(), r.solutions.end(), by_k);
  std::sort(r.beyond_bound.begin(), r.beyond_bound.end(), by_k);
  r.off_family = std::move(hits.off_family);
  std::sort(r.off_family.begin(), r.off_family.end());
}

}  // namespace

DiophantineResult solve_diophantine_serial(const CyclicChowRing& base, long k_bound) {
  auto r = prepare(base, k_bound);
  RowHits hits;
  for (long d2 = -r.d2_bound; d2 <= r.d2_bound; ++d2) {
    if (d2 != 0) search_row(r, d2, hits);
  }
  finish(r, std::move(hits));
  return r;
}

DiophantineResult solve_diophantine(const CyclicChowRing& base, long k_bound) {
  auto r = prepare(base, k_bound);
  RowHits merged;
  const long lo = -r.d2_bound;
  const long hi = r.d2_bound;
#pragma omp parallel
  {
    RowHits local;
#pragma omp for schedule(static)
    for (long d2 = lo; d2 <= hi; ++d2) {
      if (d2 != 0) search_row(r, d2, local);
    }
#pragma omp critical(chowkit_diophantine_merge)
    {
      merged.family.insert(merged.family.end(), local.family.begin(), local.family.end());
      merged.off_family.insert(merged.off_family.end(), local.off_family.begin(), local.off_family.end());
    }
  }
  finish(r, std::move(merged));
  return r;
}

// ---------------------------------------------------------------------------

std::string CandidateBundle::label() const {
  return "(" + base->name + ";" + std::to_string(c1) + "," + std::to_string(c2) + "," + std::to_string(c3) + ")";
}

BundleData CandidateBundle::bundle() const {
  return BundleData::from_generator_units(base, {Integer(c1), Integer(c2), Integer(c3)});
}

std::vector<ChernAttempt> chern_attempts(const RingRef& base, long k) {
  if (k <= 0 || 2 * k >= base->fano_index) {
    throw std::invalid_argument("need 0 < 2k < fano index " + std::to_string(base->fano_index) + " of " + base->name +
                                ", got k = " + std::to_string(k));
  }
  const Rational n(base->n);
  const Rational nm(base->n * base->m);
  const Rational kk(k);
  std::vector<ChernAttempt> out;
  for (long c1 = 3 * k - 2; c1 <= 3 * k; ++c1) {
    const Rational c(c1);
    const Rational c2 = n * (3 * c * c + 6 * kk * kk) / 9;
    const Rational c3 = nm * (7 * kk * kk * kk - 2 * c * c * c + Rational(9) / n * c * c2) / 27;
    out.push_back({base->name, k, c1, c2, c3});
  }
  return out;
}

std::vector<CandidateBundle> recover_chern(const RingRef& base, long k) {
  std::vector<CandidateBundle> out;
  for (const auto& attempt : chern_attempts(base, k)) {
    if (!attempt.integral()) continue;
    CandidateBundle candidate{base, k, Rational(2 * k), attempt.c1, attempt.c2.get_num().get_si(),
                              attempt.c3.get_num().get_si()};
    const auto d = d_series(candidate.bundle(), 3);
    if (d[2].coeff(2) != -6 * k * k || d[3].coeff(3) != 7 * k * k * k) {
      throw std::logic_error("recovered " + candidate.label() + " gives d_2 = " + d[2].to_string() +
                             ", d_3 = " + d[3].to_string());
    }
    out.push_back(std::move(candidate));
  }
  return out;
}

DimensionVerdict dimension_check(const CandidateBundle& candidate) { return dimension_check(candidate, candidate.tau); }

DimensionVerdict dimension_check(const CandidateBundle& candidate, const Rational& tau) {
  const ProjBundleRing ring(candidate.bundle());
  return {tau, anticanonical_power_degree(ring, tau, 6), anticanonical_power_degree(ring, tau, 5)};
}

Rational determinant3(const std::array<std::array<Rational, 3>, 3>& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

UnimodularityVerdict unimodularity_check(const CandidateBundle& candidate, const CyclicChowRing& z) {
  UnimodularityVerdict v;
  v.z = z.name;
  const Rational scale(z.n * z.m);
  v.matrix = {{{0, Rational(candidate.base->n), 0},
               {Rational(z.n), 0, 0},
               {Rational(candidate.c1) / scale, Rational(-candidate.c2) / scale, Rational(candidate.c3) / scale}}};
  v.determinant = determinant3(v.matrix);
  v.integral = true;
  static const char* const kBottomRow[] = {"c1", "-c2", "c3"};
  for (int col = 0; col < 3 && v.integral; ++col) {
    const auto& entry = v.matrix[2][static_cast<std::size_t>(col)];
    if (!is_integer(entry)) {
      v.integral = false;
      v.failure = "entry (3," + std::to_string(col + 1) + ") = " + kBottomRow[col] + "/(nZ mZ) = " + to_string(entry) +
                  " is not integral";
    }
  }
  if (v.integral && v.determinant != 1 && v.determinant != -1) v.failure = "det = " + to_string(v.determinant);
  return v;
}

// ---------------------------------------------------------------------------

const std::vector<ExternalExclusion>& external_exclusions() {
  static const std::vector<ExternalExclusion> facts{
      {"(P5;2,2,1)", "P5", "[Sat85]",
       "a 7-fold with two P^2-bundle structures over P5 does not arise from this Chern data"},
  };
  return facts;
}

namespace {

std::optional<std::string> exclusion_for(const std::string& candidate, const std::string& z) {
  for (const auto& fact : external_exclusions()) {
    if (fact.candidate == candidate && fact.z == z) return fact.flag;
  }
  return std::nullopt;
}

}  // namespace

ClassificationReport run_pipeline(int dim, int rho, const PipelineOptions& options) {
  if (dim != 7 || rho != 2) {
    throw std::invalid_argument("only (dim, rho) = (7, 2) is implemented, got (" + std::to_string(dim) + ", " +
                                std::to_string(rho) + ")");
  }
  ClassificationReport report;
  report.options = options;

  const BettiVector p2_over_5fold = betti_of_fibration(*builtin_base("Q5"), 2, FiberKind::ProjectiveSpace);
  for (const int fiber : {1, 2}) report.betti.push_back({p2_over_5fold, fiber, solve_base_betti(p2_over_5fold, fiber)});

  const auto bases = five_dimensional_bases();
  const auto system = build_slope_system(bases.front(), 3, 5);
  report.slope_system = system.polys;
  const auto condition = resultant_condition(system);
  if (!condition.factor_constant) throw std::logic_error("slope resultant does not split into the expected factors");
  report.resultant_constant = *condition.factor_constant;
  report.quartic_has_rational_points = quartic_factor_rationality().has_rational_points;
  report.zero_a_forces_zero_slope = zero_a_forces_zero_slope().forces_tau_zero;

  std::vector<CandidateBundle> candidates;
  for (const auto& base : bases) {
    auto solutions = solve_diophantine(*base, options.k_bound);
    for (const auto& s : solutions.solutions) {
      if (s.k <= 0 || 2 * s.k >= base->fano_index) continue;
      auto attempts = chern_attempts(base, s.k);
      report.chern_attempts.insert(report.chern_attempts.end(), attempts.begin(), attempts.end());
      auto recovered = recover_chern(base, s.k);
      candidates.insert(candidates.end(), recovered.begin(), recovered.end());
    }
    report.diophantine.push_back(std::move(solutions));
  }
  auto key = [](const CandidateBundle& c) { return std::make_tuple(c.base->name, c.k, c.c1); };
  std::sort(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });

  std::vector<CandidateRow> rows(candidates.size());
  std::vector<std::exception_ptr> errors(candidates.size());
  const auto count = static_cast<long>(candidates.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      CandidateRow row{candidates[idx], dimension_check(candidates[idx]), {}};
      for (const auto& z : bases) row.unimodularity.push_back(unimodularity_check(candidates[idx], *z));
      rows[idx] = std::move(row);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  report.candidates = std::move(rows);

  for (const auto& row : report.candidates) {
    if (!row.dimension.passed()) continue;
    for (const auto& u : row.unimodularity) {
      if (!u.passed()) continue;
      Survivor s{row.candidate.label(), u.z, std::nullopt};
      if (options.external_exclusions) s.excluded_by = exclusion_for(s.candidate, s.z);
      report.unimodular_pairs.push_back(s);
      if (!s.excluded_by) report.survivors.push_back(s);
    }
  }
  return report;
}

SpinorCheck spinor_consistency_check() {
  const auto bundle = BundleData::from_generator_units(builtin_base("Q5"), {2, 2, 2, 0});
  const ProjBundleRing ring(bundle);
  SpinorCheck out;
  for (int i = 0; i <= ring.total_dim(); ++i) {
    out.profile_tau2.push_back(anticanonical_power_degree(ring, 2, i));
    out.profile_tau0.push_back(anticanonical_power_degree(ring, 0, i));
  }
  out.top_vanishes = out.profile_tau2[7] == 0 && out.profile_tau2[8] == 0;
  out.level6_nonzero = out.profile_tau2[6] != 0;
  out.non_product = out.profile_tau0[7] != 0;
  return out;
}

}  // namespace chowkit
