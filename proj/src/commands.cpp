#include "chowkit/commands.hpp"

#include <sstream>
#include <stdexcept>

#include "chowkit/projbundle.hpp"
#include "chowkit/slopes.hpp"

namespace chowkit {

namespace {

std::string join(const std::vector<long>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

std::string units_or_dash(const ChowClass& x, int codim) {
  if (x.is_zero()) return "0";
  try {
    return to_string(in_generator_units(x, codim).value);
  } catch (const std::domain_error&) {
    return "-";
  }
}

std::vector<Field> bundle_inputs(const std::string& base, int rank, const std::vector<long>& chern) {
  return {{"base", base}, {"rank", long{rank}}, {"chern", chern.empty() ? std::string("symbolic") : join(chern)}};
}

std::string betti_string(const BettiVector& b) {
  std::string out = "(";
  for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
  return out + ")";
}

}  // namespace

BundleData bundle_from_units(const std::string& base, int rank, const std::vector<long>& chern) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (chern.size() != static_cast<std::size_t>(rank)) {
    throw std::invalid_argument("expected " + std::to_string(rank) + " Chern classes, got " +
                                std::to_string(chern.size()));
  }
  std::vector<Integer> units;
  for (const long c : chern) units.emplace_back(c);
  return BundleData::from_generator_units(builtin_base(base), units);
}

Report d_classes_report(const std::string& base, int rank, const std::vector<long>& chern,
                        std::optional<int> max_index) {
  const auto bundle = bundle_from_units(base, rank, chern);
  const int top = max_index.value_or(bundle.ring->dim);
  const auto s = segre_from_chern(bundle, top);
  const auto d = d_series(bundle, top);
  const auto delta = delta_series(bundle, top);

  Report report{"d-classes", bundle_inputs(base, rank, chern), {}, {}, {}};
  report.inputs.emplace_back("max_index", long{top});
  Table table{"classes", {"i", "s_i", "d_i", "Delta_i", "s_i units", "d_i units", "Delta_i units"}, {}};
  for (int i = 0; i <= top; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    table.rows.push_back({long{i}, s[idx].to_string(), d[idx].to_string(), delta[idx].to_string(),
                          units_or_dash(s[idx], i), units_or_dash(d[idx], i), units_or_dash(delta[idx], i)});
  }
  report.tables.push_back(std::move(table));
  return report;
}

Report intersect_report(const std::string& base, int rank, const std::vector<long>& chern, const std::string& tau,
                        int power, int hpower) {
  const auto bundle = bundle_from_units(base, rank, chern);
  const ProjBundleRing ring(bundle);
  if (power < 0 || hpower < 0 || power + hpower != ring.total_dim()) {
    throw std::invalid_argument("power + hpower must equal dim P(E) = " + std::to_string(ring.total_dim()));
  }
  const Rational t = parse_rational(tau);
  Report report{"intersect", bundle_inputs(base, rank, chern), {}, {}, {}};
  report.inputs.emplace_back("tau", t);
  report.inputs.emplace_back("power", long{power});
  report.inputs.emplace_back("hpower", long{hpower});
  const Rational expanded = anticanonical_power_degree_by_expansion(ring, t, power);
  const Rational formula = anticanonical_power_degree_by_d_classes(ring, t, power);
  report.summary = {{"intersection", expanded}, {"ring_expansion", expanded}, {"d_class_formula", formula}};
  report.checks.push_back({"dual-path", expanded == formula ? CheckStatus::Pass : CheckStatus::Fail,
                           "ring expansion " + to_string(expanded) + ", d-class formula " + to_string(formula)});
  return report;
}

Report slope_system_report(const std::string& base, int rank, const std::vector<long>& chern,
                           std::optional<int> dim_bound) {
  const auto ring = builtin_base(base);
  const int bound = dim_bound.value_or(ring->dim);
  const auto system = chern.empty() ? build_slope_system(ring, rank, bound)
                                    : build_slope_system(bundle_from_units(base, rank, chern), bound);
  Report report{"slope-system", bundle_inputs(base, rank, chern), {}, {}, {}};
  report.inputs.emplace_back("dim_bound", long{bound});
  Table table{"conditions", {"i", "polynomial"}, {}};
  for (std::size_t j = 0; j < system.polys.size(); ++j) {
    table.rows.push_back({long{system.indices[j]}, system.polys[j].to_string()});
  }
  report.tables.push_back(std::move(table));
  report.summary = {{"total_dim", long{system.total_dim}}, {"symbolic", system.symbolic}};
  return report;
}

Report resultant_report(const std::string& base, int rank, const std::vector<long>& chern,
                        std::optional<long> family_k) {
  const auto ring = builtin_base(base);
  const auto system = chern.empty() ? build_slope_system(ring, rank, ring->dim)
                                    : build_slope_system(bundle_from_units(base, rank, chern), ring->dim);
  const auto condition = resultant_condition(system);
  Report report{"resultant", bundle_inputs(base, rank, chern), {}, {}, {}};
  if (family_k) report.inputs.emplace_back("k", *family_k);

  Table eqs{"equations", {"i", "polynomial"}, {}};
  for (std::size_t j = 0; j < system.polys.size(); ++j) {
    eqs.rows.push_back({long{system.indices[j]}, system.polys[j].to_string()});
  }
  report.tables.push_back(std::move(eqs));
  report.summary.emplace_back("resultant", condition.resultant.to_string());
  if (system.symbolic && ring->dim == 5) {
    Table factors{"factors", {"factor"}, {}};
    for (const auto& f : resultant_factors()) factors.rows.push_back({f.to_string()});
    report.tables.push_back(std::move(factors));
    const bool split = condition.factor_constant.has_value();
    if (split) report.summary.emplace_back("constant", *condition.factor_constant);
    report.checks.push_back({"factorization", split ? CheckStatus::Pass : CheckStatus::Fail,
                             split ? "exact division by all three factors" : "a factor left a remainder"});
  }
  if (family_k) {
    if (!system.symbolic || ring->dim != 5) {
      throw std::invalid_argument("--k needs the symbolic rank-3 system on a 5-fold");
    }
    const auto family = analyze_family_roots(*family_k);
    Table spec{"family", {"polynomial", "specialization", "leading"}, {}};
    spec.rows.push_back({std::string("f"), family.f.to_string(), family.f_leading});
    spec.rows.push_back({std::string("g"), family.g.to_string(), family.g_leading});
    report.tables.push_back(std::move(spec));
    report.summary.emplace_back("gcd", family.gcd.to_string());
    report.summary.emplace_back("common_root", family.root.tau);
  }
  return report;
}

Report enumerate_report(int dim, int rho, const PipelineOptions& options) {
  const auto result = run_pipeline(dim, rho, options);
  Report report{"enumerate",
                {{"dim", long{dim}},
                 {"rho", long{rho}},
                 {"k_bound", options.k_bound},
                 {"external_exclusions", options.external_exclusions}},
                {},
                {},
                {}};

  Table betti{"betti filter", {"total", "fiber_dim", "base", "verdict"}, {}};
  for (const auto& row : result.betti) {
    if (const auto* ok = std::get_if<BettiVector>(&row.solution)) {
      betti.rows.push_back({betti_string(row.total), long{row.fiber_dim}, betti_string(*ok), std::string("feasible")});
    } else {
      const auto& bad = std::get<BettiInfeasibility>(row.solution);
      std::ostringstream why;
      why << bad.violated << " fails (b_" << bad.lower_degree << " = " << bad.lower_value << ", b_"
          << bad.upper_degree << " = " << bad.upper_value << ")";
      betti.rows.push_back({betti_string(row.total), long{row.fiber_dim}, betti_string(bad.solved), why.str()});
    }
  }
  report.tables.push_back(std::move(betti));

  Table slopes{"slope system", {"i", "polynomial"}, {}};
  for (std::size_t j = 0; j < result.slope_system.size(); ++j) {
    slopes.rows.push_back({long{7 - static_cast<long>(j)}, result.slope_system[j].to_string()});
  }
  report.tables.push_back(std::move(slopes));

  Table dio{"diophantine", {"base", "n", "m", "d2_bound", "d3_bound", "solutions (d2,d3,k)", "off_family", "complete"},
            {}};
  for (const auto& d : result.diophantine) {
    std::string sols;
    for (const auto& s : d.solutions) {
      sols += (sols.empty() ? "" : " ") + ("(" + std::to_string(s.d2) + "," + std::to_string(s.d3) + "," +
                                           std::to_string(s.k) + ")");
    }
    dio.rows.push_back({d.base, d.n, d.m, d.d2_bound, d.d3_bound, sols.empty() ? std::string("-") : sols,
                        static_cast<long>(d.off_family.size()), d.complete()});
  }
  report.tables.push_back(std::move(dio));

  Table chern{"chern recovery", {"base", "k", "c1", "c2", "c3", "integral"}, {}};
  for (const auto& a : result.chern_attempts) chern.rows.push_back({a.base, a.k, a.c1, a.c2, a.c3, a.integral()});
  report.tables.push_back(std::move(chern));

  Table cand{"candidates", {"candidate", "k", "tau", "(-K+tau*H)^6.H", "(-K+tau*H)^5.H^2", "image_dim"}, {}};
  Table uni{"unimodularity", {"candidate", "Z", "det", "integral", "verdict"}, {}};
  for (const auto& row : result.candidates) {
    cand.rows.push_back({row.candidate.label(), row.candidate.k, row.candidate.tau, row.dimension.degree_i6,
                         row.dimension.degree_i5, long{row.dimension.image_dim()}});
    for (const auto& u : row.unimodularity) {
      uni.rows.push_back({row.candidate.label(), u.z, u.determinant, u.integral,
                          u.passed() ? std::string("unimodular") : u.failure});
    }
  }
  report.tables.push_back(std::move(cand));
  report.tables.push_back(std::move(uni));

  Table surv{"survivors", {"candidate", "Z", "status"}, {}};
  surv.rows.push_back({std::string("P^2 x Y (tau = 0)"), std::string("-"), std::string("product")});
  for (const auto& s : result.unimodular_pairs) {
    surv.rows.push_back(
        {s.candidate, s.z, s.excluded_by ? "excluded " + *s.excluded_by : std::string("survives")});
  }
  report.tables.push_back(std::move(surv));

  std::string finals;
  for (const auto& s : result.survivors) finals += (finals.empty() ? "" : " ") + s.candidate + "/" + s.z;
  report.summary = {{"resultant_constant", result.resultant_constant},
                    {"quartic_rational_points", result.quartic_has_rational_points},
                    {"a_zero_forces_tau_zero", result.zero_a_forces_zero_slope},
                    {"candidate_rows", static_cast<long>(result.candidates.size())},
                    {"unimodular_pairs", static_cast<long>(result.unimodular_pairs.size())},
                    {"product_candidate", result.product_candidate},
                    {"nontrivial_survivors", static_cast<long>(result.survivors.size())},
                    {"final", finals.empty() ? std::string("-") : finals}};

  if (options.external_exclusions) {
    for (const auto& fact : external_exclusions()) {
      report.checks.push_back(
          {fact.flag + " " + fact.candidate + "/" + fact.z, CheckStatus::AssumedExternal, fact.statement});
    }
  }
  return report;
}

}  // namespace chowkit
