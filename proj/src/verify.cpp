#include "chowkit/verify.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "chowkit/classify.hpp"
#include "chowkit/corpus.hpp"
#include "chowkit/quadric.hpp"
#include "chowkit/slopes.hpp"

namespace chowkit {

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

Check run_check(const std::string& name, const std::function<Outcome()>& body) {
  try {
    const auto outcome = body();
    return {name, outcome.ok ? CheckStatus::Pass : CheckStatus::Fail, outcome.detail};
  } catch (const std::exception& e) {
    return {name, CheckStatus::Fail, std::string("exception: ") + e.what()};
  }
}

MultiPoly parse_ab_poly(const std::vector<std::pair<Rational, std::array<unsigned, 3>>>& terms) {
  // exponents are (tau, a, b)
  MultiPoly p({"tau", "a", "b"});
  for (const auto& [c, e] : terms) p.add_term({e[0], e[1], e[2]}, c);
  return p;
}

Outcome slope_system_exact() {
  const auto sys = build_slope_system(builtin_base("Q5"), 3, 5);
  const auto f = parse_ab_poly({{21, {5, 0, 0}}, {35, {3, 1, 0}}, {21, {2, 0, 1}}, {7, {1, 2, 0}}, {2, {0, 1, 1}}});
  const auto g = parse_ab_poly({{15, {4, 0, 0}}, {15, {2, 1, 0}}, {6, {1, 0, 1}}, {1, {0, 2, 0}}});
  const bool ok = sys.polys.size() == 2 && sys.polys[0] == f && sys.polys[1] == g;
  return {ok, "f = " + sys.polys[0].to_string() + "; g = " + sys.polys[1].to_string()};
}

Outcome resultant_factorization() {
  const auto c = resultant_condition(build_slope_system(builtin_base("Q5"), 3, 5));
  if (!c.factor_constant) return {false, "resultant not divisible by the three factors"};
  return {*c.factor_constant != 0, "quotient = " + to_string(*c.factor_constant)};
}

Outcome family_roots() {
  for (long k = -10; k <= 10; ++k) {
    if (k == 0) continue;
    const auto fa = analyze_family_roots(k);
    if (fa.root.tau != 2 * k || fa.f_leading != 21 || fa.g_leading != 3) {
      return {false, "k = " + std::to_string(k) + ": gcd " + fa.gcd.to_string()};
    }
  }
  return {true, "gcd = tau - 2k and both factorizations exact for 1 <= |k| <= 10"};
}

Outcome diophantine_completeness() {
  std::string detail;
  bool ok = true;
  for (const auto& base : five_dimensional_bases()) {
    const auto r = solve_diophantine(*base, 3);
    const bool here = r.complete() && r.solutions.size() == 6;
    ok = ok && here;
    detail += (detail.empty() ? "" : "; ") + base->name + ": " + std::to_string(r.solutions.size()) +
              " family points, " + std::to_string(r.off_family.size()) + " off family";
  }
  return {ok, detail};
}

std::string labels(const std::vector<CandidateRow>& rows) {
  std::string out;
  for (const auto& r : rows) out += (out.empty() ? "" : " ") + r.candidate.label();
  return out;
}

Outcome candidate_table(const ClassificationReport& report) {
  const std::string expected = "(KG2;2,6,6) (P5;2,2,1) (P5;4,8,8) (Q5;2,2,2) (Q5;4,8,16)";
  const auto got = labels(report.candidates);
  return {got == expected, got};
}

Outcome unimodularity(const ClassificationReport& report) {
  std::set<std::string> passing;
  for (const auto& row : report.candidates) {
    for (const auto& u : row.unimodularity) {
      if (u.passed()) {
        if (u.determinant != -1) return {false, "unexpected determinant " + to_string(u.determinant)};
        passing.insert(row.candidate.label() + "/" + u.z);
      }
    }
  }
  const std::set<std::string> expected{"(P5;2,2,1)/P5", "(Q5;2,2,2)/Q5"};
  const bool survivor_ok = report.survivors.size() == 1 && report.survivors[0].candidate == "(Q5;2,2,2)" &&
                           report.survivors[0].z == "Q5";
  std::string detail = "unimodular:";
  for (const auto& p : passing) detail += " " + p;
  detail += "; survivor " + (report.survivors.empty() ? std::string("none")
                                                       : report.survivors[0].candidate + "/" + report.survivors[0].z);
  return {passing == expected && survivor_ok, detail};
}

Outcome ottaviani_intersections() {
  const auto q5 = builtin_base("Q5");
  Rational per_k3;
  std::string detail;
  for (const long k : {1L, 2L}) {
    for (const auto& c : recover_chern(q5, k)) {
      const auto v = dimension_check(c);
      if (v.degree_i6 != 0) return {false, c.label() + ": degree-6 number " + to_string(v.degree_i6)};
      const Rational ratio = v.degree_i5 / Rational(k * k * k);
      if (k == 1) per_k3 = ratio;
      if (ratio != per_k3 || ratio <= 0) return {false, c.label() + ": degree-5 number " + to_string(v.degree_i5)};
      detail += (detail.empty() ? "" : "; ") + c.label() + " i=5: " + to_string(v.degree_i5);
    }
  }
  return {true, detail + " (= " + to_string(per_k3) + " k^3)"};
}

Outcome class_calculus(const std::vector<CorpusSample>& corpus) {
  std::size_t rank3 = 0;
  for (std::size_t s = 0; s < corpus.size(); ++s) {
    const auto& b = corpus[s].bundle;
    const int dim = b.ring->dim;
    const auto where = "sample " + std::to_string(s) + ": ";
    const auto delta = delta_series(b, dim);
    for (int i = 0; i <= dim; ++i) {
      if (!(delta[static_cast<std::size_t>(i)] == delta_closed_form(b, i))) return {false, where + "Delta closed form"};
      if (i > b.rank && !delta[static_cast<std::size_t>(i)].is_zero()) return {false, where + "Delta above rank"};
    }
    const auto c_back = chern_from_segre(segre_from_chern(b, dim), dim);
    for (int i = 0; i <= dim; ++i) {
      if (!(c_back[static_cast<std::size_t>(i)] == b.c(i))) return {false, where + "Chern/Segre roundtrip"};
    }
    const auto d = d_series(b, dim);
    if (!(d[0] == ChowClass::unit(b.ring)) || !d[1].is_zero()) return {false, where + "d_0, d_1"};
    if (b.rank == 3 && dim >= 5) {
      ++rank3;
      if (!verify_low_rank_reductions(b).passed) return {false, where + "rank-3 reductions"};
    }
  }
  return {true, std::to_string(corpus.size()) + " samples, " + std::to_string(rank3) + " rank-3 reductions"};
}

Outcome grothendieck(const std::vector<CorpusSample>& corpus, GrothendieckRule rule) {
  for (std::size_t s = 0; s < corpus.size(); ++s) {
    const ProjBundleRing ring(corpus[s].bundle, rule);
    const auto rel = anticanonical_grothendieck_relation(ring);
    if (!rel.is_zero()) return {false, "sample " + std::to_string(s) + ": relation reduces to " + rel.to_string()};
  }
  return {true, std::to_string(corpus.size()) + " samples reduce to 0"};
}

Outcome dual_path(const std::vector<CorpusSample>& corpus) {
  std::size_t evaluations = 0;
  for (const auto& sample : corpus) {
    const ProjBundleRing ring(sample.bundle);
    for (int i = 0; i <= ring.total_dim(); ++i) {
      anticanonical_power_degree(ring, sample.tau, i);
      ++evaluations;
    }
  }
  return {true, std::to_string(evaluations) + " evaluations agree"};
}

Outcome quadric_case() {
  const auto q = QuadricBundleRing::symbolic();
  const auto v = quadric_case_conclusion(q);
  const auto tau = MultiPoly::variable("tau");
  const auto h4 = MultiPoly::variable("h4");
  const auto c2h2 = MultiPoly::variable("c2h2");
  const auto e5 = Rational(10) * h4 * tau.pow(2) - Rational(9) * c2h2;
  const auto e6 = Rational(10) * h4 * tau.pow(3) - Rational(27) * c2h2 * tau;
  const bool prop5 = divide_exact(v.equation_i5, e5).has_value() && divide_exact(v.equation_i5, e5)->as_constant();
  const bool prop6 = divide_exact(v.equation_i6, e6).has_value() && divide_exact(v.equation_i6, e6)->as_constant();
  const bool ok = prop5 && prop6 && v.only_trivial_solution && v.image_dim_at_most_3;
  return {ok, v.summary};
}

Outcome betti_filter() {
  const auto solved = solve_base_betti({1, 2, 3, 3, 3, 3, 2, 1}, 1);
  const auto* bad = std::get_if<BettiInfeasibility>(&solved);
  if (bad == nullptr) return {false, "P^1-fibration ansatz unexpectedly feasible"};
  const bool ok = bad->lower_degree == 4 && bad->lower_value == 2 && bad->upper_degree == 6 && bad->upper_value == 1;
  return {ok, bad->violated + ": b_4 = " + std::to_string(bad->lower_value) + ", b_6 = " +
                  std::to_string(bad->upper_value)};
}

Outcome spinor_profile() {
  const auto s = spinor_consistency_check();
  std::string profile;
  for (const auto& v : s.profile_tau2) profile += (profile.empty() ? "" : ",") + to_string(v);
  return {s.passed(), "tau = 2 profile (" + profile + "), (-K)^7.H = " + to_string(s.profile_tau0[7])};
}

}  // namespace

Report self_check_report(const VerifyOptions& options) {
  Report report{"verify-paper",
                {{"corpus_seed", static_cast<long>(options.corpus_seed)},
                 {"corpus_size", static_cast<long>(options.corpus_size)},
                 {"grothendieck_rule", std::string(options.grothendieck_rule == GrothendieckRule::Standard
                                                       ? "standard"
                                                       : "sign-flipped")}},
                {},
                {},
                {}};
  const auto corpus = random_bundle_corpus(options.corpus_seed, options.corpus_size);
  std::optional<ClassificationReport> pipeline;
  const auto get_pipeline = [&]() -> const ClassificationReport& {
    if (!pipeline) pipeline = run_pipeline(7, 2);
    return *pipeline;
  };

  auto& checks = report.checks;
  checks.push_back(run_check("slope-system", slope_system_exact));
  checks.push_back(run_check("resultant-factorization", resultant_factorization));
  checks.push_back(run_check("family-roots", family_roots));
  checks.push_back(run_check("diophantine-completeness", diophantine_completeness));
  checks.push_back(run_check("candidate-table", [&] { return candidate_table(get_pipeline()); }));
  checks.push_back(run_check("unimodularity-filter", [&] { return unimodularity(get_pipeline()); }));
  checks.push_back(run_check("ottaviani-intersections", ottaviani_intersections));
  checks.push_back(run_check("class-calculus", [&] { return class_calculus(corpus); }));
  checks.push_back(
      run_check("grothendieck-relation", [&] { return grothendieck(corpus, options.grothendieck_rule); }));
  checks.push_back(run_check("dual-path", [&] { return dual_path(corpus); }));
  checks.push_back(run_check("quadric-case", quadric_case));
  checks.push_back(run_check("betti-filter", betti_filter));
  checks.push_back(run_check("spinor-profile", spinor_profile));
  for (const auto& fact : external_exclusions()) {
    checks.push_back({fact.flag + " " + fact.candidate + "/" + fact.z, CheckStatus::AssumedExternal, fact.statement});
  }
  checks.push_back({"ottaviani-existence", CheckStatus::AssumedExternal,
                    "a rank-3 bundle on Q5 with c = (2,2,2) exists and P(E) has a second P^2-bundle structure"});

  long passed = 0;
  for (const auto& c : checks) passed += c.status == CheckStatus::Pass ? 1 : 0;
  report.summary = {{"passed", passed}, {"total", static_cast<long>(checks.size())}};
  return report;
}

}  // namespace chowkit
