// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.
//
// usage: chowkit_acceptance <path-to-chowkit-cli> <golden-dir>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "chowkit/classify.hpp"
#include "chowkit/corpus.hpp"
#include "chowkit/quadric.hpp"
#include "chowkit/resultant.hpp"
#include "chowkit/roots.hpp"

using namespace chowkit;

namespace {

struct Result {
  bool ok = false;
  std::string detail;
};

MultiPoly tab(std::initializer_list<std::pair<long, std::array<unsigned, 3>>> terms) {
  MultiPoly p({"tau", "a", "b"});
  for (const auto& [c, e] : terms) p.add_term({e[0], e[1], e[2]}, Rational(c));
  return p;
}

Result ac1() {
  const auto sys = build_slope_system(builtin_base("Q5"), 3, 5);
  const auto f = tab({{21, {5, 0, 0}}, {35, {3, 1, 0}}, {21, {2, 0, 1}}, {7, {1, 2, 0}}, {2, {0, 1, 1}}});
  const auto g = tab({{15, {4, 0, 0}}, {15, {2, 1, 0}}, {6, {1, 0, 1}}, {1, {0, 2, 0}}});
  return {sys.polys.size() == 2 && sys.polys[0] == f && sys.polys[1] == g,
          "f = " + sys.polys[0].to_string() + ", g = " + sys.polys[1].to_string()};
}

Result ac2() {
  const auto sys = build_slope_system(builtin_base("Q5"), 3, 5);
  std::optional<MultiPoly> q = sylvester_resultant(sys.polys[0], sys.polys[1], "tau");
  for (const auto& factor : resultant_factors()) {
    q = divide_exact(*q, factor);
    if (!q) return {false, "a factor does not divide the resultant"};
  }
  const auto c = q->as_constant();
  return {c.has_value() && *c != 0, "quotient " + q->to_string()};
}

Result ac3() {
  const auto tau = MultiPoly::variable("tau");
  const auto sys = build_slope_system(builtin_base("Q5"), 3, 5);
  for (long k = -10; k <= 10; ++k) {
    if (k == 0) continue;
    const Rational kk(k);
    auto spec = [&](const MultiPoly& p) {
      return p.substitute("a", -6 * kk * kk).substitute("b", 7 * kk * kk * kk).compacted();
    };
    const auto f = spec(sys.polys[0]);
    const auto g = spec(sys.polys[1]);
    const auto K = MultiPoly::constant(kk);
    const auto f_fac = Rational(21) * (tau - Rational(2) * K).pow(2) * (tau + K) * (tau.pow(2) + Rational(3) * K * tau - K * K);
    const auto g_fac = Rational(3) * (tau - Rational(2) * K) *
                       (Rational(5) * tau.pow(3) + Rational(10) * K * tau.pow(2) - Rational(10) * K * K * tau -
                        Rational(6) * K * K * K);
    const auto qf = divide(f, f_fac, "tau");
    const auto qg = divide(g, g_fac, "tau");
    const bool fac_ok = qf.exact() && qg.exact() && qf.quotient == MultiPoly::constant(1) &&
                        qg.quotient == MultiPoly::constant(1);
    if (!fac_ok || !(univariate_gcd(f, g, "tau") == tau - Rational(2) * K)) {
      return {false, "k = " + std::to_string(k)};
    }
  }
  return {true, "gcd = tau - 2k, both factorizations exact, 1 <= |k| <= 10"};
}

Result ac4() {
  std::string detail;
  for (const auto& base : five_dimensional_bases()) {
    const long K = 3;
    const auto r = solve_diophantine(*base, K);
    // independent scan of the same box
    long hits = 0;
    for (long d2 = -r.d2_bound; d2 <= r.d2_bound; ++d2) {
      for (long d3 = -r.d3_bound; d3 <= r.d3_bound; ++d3) {
        if (d2 == 0 && d3 == 0) continue;
        if (Integer(216) * base->n * d3 * d3 + Integer(49) * base->m * base->m * d2 * d2 * d2 != 0) continue;
        ++hits;
        bool on_family = false;
        for (long k = -2 * K; k <= 2 * K && !on_family; ++k) {
          on_family = d2 == -6 * base->n * k * k && d3 == 7 * base->n * base->m * k * k * k;
        }
        if (!on_family) return {false, base->name + ": off-family point (" + std::to_string(d2) + "," + std::to_string(d3) + ")"};
      }
    }
    const auto found = static_cast<long>(r.solutions.size() + r.beyond_bound.size());
    if (hits != found || !r.complete()) return {false, base->name + ": solver/scan mismatch"};
    detail += (detail.empty() ? "" : ", ") + base->name + " " + std::to_string(hits) + " points";
  }
  return {true, detail};
}

Result ac5(const ClassificationReport& report) {
  std::vector<std::string> got;
  for (const auto& row : report.candidates) got.push_back(row.candidate.label());
  const std::vector<std::string> want{"(KG2;2,6,6)", "(P5;2,2,1)", "(P5;4,8,8)", "(Q5;2,2,2)", "(Q5;4,8,16)"};
  std::string detail;
  for (const auto& g : got) detail += (detail.empty() ? "" : " ") + g;
  return {got == want, detail};
}

Result ac6(const ClassificationReport& report) {
  std::set<std::string> passing;
  for (const auto& row : report.candidates) {
    for (const auto& u : row.unimodularity) {
      if (u.integral && (u.determinant == 1 || u.determinant == -1)) {
        if (u.determinant != -1) return {false, "det +1 for " + row.candidate.label()};
        passing.insert(row.candidate.label() + "/" + u.z);
      }
    }
  }
  const bool ok = passing == std::set<std::string>{"(P5;2,2,1)/P5", "(Q5;2,2,2)/Q5"} && report.survivors.size() == 1 &&
                  report.survivors[0].candidate == "(Q5;2,2,2)" && report.survivors[0].z == "Q5";
  return {ok, "survivor " + (report.survivors.empty() ? std::string("none")
                                                      : report.survivors[0].candidate + "/" + report.survivors[0].z)};
}

Result ac7() {
  const auto q5 = builtin_base("Q5");
  Rational constant;
  std::string detail;
  for (const long k : {1L, 2L}) {
    const std::vector<Integer> units = k == 1 ? std::vector<Integer>{2, 2, 2} : std::vector<Integer>{4, 8, 16};
    const ProjBundleRing ring(BundleData::from_generator_units(q5, units));
    const Rational i6 = anticanonical_power_degree(ring, 2 * k, 6);
    const Rational i5 = anticanonical_power_degree(ring, 2 * k, 5);
    if (i6 != 0) return {false, "degree-6 number " + to_string(i6) + " at k = " + std::to_string(k)};
    const Rational c = i5 / (k * k * k);
    if (k == 1) constant = c;
    if (c != constant || c <= 0) return {false, "i = 5 value " + to_string(i5) + " at k = " + std::to_string(k)};
    detail += (detail.empty() ? "" : ", ") + ("k=" + std::to_string(k) + ": " + to_string(i5));
  }
  return {true, detail + " = " + to_string(constant) + " k^3"};
}

Result ac8(const std::vector<CorpusSample>& corpus) {
  std::set<std::string> bases;
  std::set<int> ranks;
  for (const auto& s : corpus) {
    const auto& b = s.bundle;
    bases.insert(b.ring->name);
    ranks.insert(b.rank);
    const int dim = b.ring->dim;
    const auto delta = delta_series(b, dim);
    const auto back = chern_from_segre(segre_from_chern(b, dim), dim);
    const auto d = d_series(b, dim);
    if (!(d[0] == ChowClass::unit(b.ring)) || !d[1].is_zero()) return {false, "d_0/d_1"};
    for (int i = 0; i <= dim; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      if (!(delta[idx] == delta_closed_form(b, i))) return {false, "Delta closed form"};
      if (i > b.rank && !delta[idx].is_zero()) return {false, "Delta above rank"};
      if (!(back[idx] == b.c(i))) return {false, "Chern/Segre roundtrip"};
    }
    if (b.rank == 3 && dim >= 5 && !(d[4] == d[2] * d[2] && d[5] == Rational(2) * d[2] * d[3])) {
      return {false, "rank-3 reductions"};
    }
  }
  return {corpus.size() >= 100 && ranks.size() == 6,
          std::to_string(corpus.size()) + " samples over " + std::to_string(bases.size()) + " bases, ranks 1-6"};
}

Result ac9(const std::vector<CorpusSample>& corpus) {
  for (const auto& s : corpus) {
    if (!anticanonical_grothendieck_relation(ProjBundleRing(s.bundle)).is_zero()) return {false, "nonzero relation"};
  }
  return {true, std::to_string(corpus.size()) + " samples"};
}

Result ac10(const std::vector<CorpusSample>& corpus) {
  long n = 0;
  for (const auto& s : corpus) {
    const ProjBundleRing ring(s.bundle);
    for (int i = 0; i <= ring.total_dim(); ++i, ++n) {
      if (anticanonical_power_degree_by_expansion(ring, s.tau, i) !=
          anticanonical_power_degree_by_d_classes(ring, s.tau, i)) {
        return {false, "mismatch at i = " + std::to_string(i)};
      }
    }
  }
  return {true, std::to_string(n) + " evaluations"};
}

Result ac11() {
  const auto q = QuadricBundleRing::symbolic();
  const auto tau = MultiPoly::variable("tau");
  const auto h4 = MultiPoly::variable("h4");
  const auto c2h2 = MultiPoly::variable("c2h2");
  auto proportional = [](const MultiPoly& p, const MultiPoly& base) {
    const auto q = divide_exact(p, base);
    return q && q->as_constant() && *q->as_constant() != 0;
  };
  const bool e5 = proportional(quadric_intersection(q, tau, 5, 2), Rational(10) * h4 * tau.pow(2) - Rational(9) * c2h2);
  const bool e6 = proportional(quadric_intersection(q, tau, 6, 1),
                               Rational(10) * h4 * tau.pow(3) - Rational(27) * c2h2 * tau);
  const auto v = quadric_case_conclusion(q);
  const bool concl = v.only_trivial_solution && v.anticanonical_top.is_zero() && v.image_dim_at_most_3;
  return {e5 && e6 && concl, v.summary};
}

Result ac12() {
  const auto s = solve_base_betti({1, 2, 3, 3, 3, 3, 2, 1}, 1);
  const auto* bad = std::get_if<BettiInfeasibility>(&s);
  if (bad == nullptr) return {false, "reported feasible"};
  const bool ok = bad->lower_degree == 4 && bad->lower_value == 2 && bad->upper_degree == 6 &&
                  bad->upper_value == 1 && bad->violated.find("hard Lefschetz") != std::string::npos;
  return {ok, bad->violated + " (b_4 = " + std::to_string(bad->lower_value) + ", b_6 = " +
                  std::to_string(bad->upper_value) + ")"};
}

int run_cli(const std::string& cli, const std::string& args, std::string& out) {
  FILE* pipe = popen((cli + " " + args + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return -1;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Result ac13(const std::string& cli, const std::filesystem::path& golden) {
  std::string verify_out;
  std::string text;
  std::string json;
  const int verify = run_cli(cli, "verify-paper", verify_out);
  const int t = run_cli(cli, "enumerate", text);
  const int j = run_cli(cli, "enumerate --format json", json);
  const bool text_ok = t == 0 && text == slurp(golden / "enumerate.txt");
  const bool json_ok = j == 0 && json == slurp(golden / "enumerate.json");
  return {verify == 0 && text_ok && json_ok, "verify-paper exit " + std::to_string(verify) + ", text golden " +
                                                 (text_ok ? "equal" : "differs") + ", json golden " +
                                                 (json_ok ? "equal" : "differs")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " <chowkit-cli> <golden-dir>\n";
    return 2;
  }
  const auto corpus = random_bundle_corpus(20260417, 120);
  const auto report = run_pipeline(7, 2);

  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"AC1 slope system exactness", ac1},
      {"AC2 resultant factorization", ac2},
      {"AC3 family and roots", ac3},
      {"AC4 diophantine completeness", ac4},
      {"AC5 candidate table", [&] { return ac5(report); }},
      {"AC6 unimodularity filter", [&] { return ac6(report); }},
      {"AC7 Ottaviani intersection numbers", ac7},
      {"AC8 class-calculus properties", [&] { return ac8(corpus); }},
      {"AC9 Grothendieck relation for -K", [&] { return ac9(corpus); }},
      {"AC10 dual-path consistency", [&] { return ac10(corpus); }},
      {"AC11 quadric-bundle case", ac11},
      {"AC12 Betti filter", ac12},
      {"AC13 CLI contract", [&] { return ac13(argv[1], argv[2]); }},
  };

  int failures = 0;
  for (const auto& [name, body] : criteria) {
    Result r;
    try {
      r = body();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failures += r.ok ? 0 : 1;
    std::cout << (r.ok ? "PASS " : "FAIL ") << name << ": " << r.detail << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
