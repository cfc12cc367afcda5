// chowkit command-line front end.
//
// Exit status: 0 success, 1 a check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chowkit/commands.hpp"
#include "chowkit/verify.hpp"

namespace {

constexpr int kUsageError = 2;

struct BundleOptions {
  std::string base = "Q5";
  int rank = 3;
  std::vector<long> chern;
};

void add_bundle_options(CLI::App* cmd, BundleOptions& opts, bool chern_required) {
  cmd->add_option("--base", opts.base, "Base variety (P1, P4, P5, Q5, KG2)")->capture_default_str();
  cmd->add_option("--rank", opts.rank, "Bundle rank")->capture_default_str();
  auto* chern = cmd->add_option("--chern", opts.chern, "Chern classes in generator units, comma separated")
                    ->delimiter(',');
  if (chern_required) chern->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection theory on projectivized bundles"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  long k_bound = 2;
  bool no_external = false;
  std::string out_path;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--k-bound", k_bound, "Family bound |k| for enumerate")->capture_default_str();
  app.add_flag("--no-external", no_external, "Do not apply externally known exclusions");
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");

  BundleOptions dc_opts;
  std::optional<int> dc_max;
  auto* d_classes = app.add_subcommand("d-classes", "Segre, d and Delta classes of a bundle");
  add_bundle_options(d_classes, dc_opts, true);
  d_classes->add_option("--max", dc_max, "Largest index (default: dimension of the base)");

  BundleOptions is_opts;
  std::string tau = "0";
  int power = 0;
  int hpower = 0;
  auto* intersect = app.add_subcommand("intersect", "(-K + tau H)^power . H^hpower on P(E)");
  add_bundle_options(intersect, is_opts, true);
  intersect->add_option("--tau", tau, "Slope, an integer or p/q")->capture_default_str();
  intersect->add_option("--power", power, "Exponent of -K + tau H")->required();
  intersect->add_option("--hpower", hpower, "Exponent of H")->required();

  BundleOptions ss_opts;
  std::optional<int> dim_bound;
  auto* slope_system = app.add_subcommand("slope-system", "Vanishing conditions on the slope");
  add_bundle_options(slope_system, ss_opts, false);
  slope_system->add_option("--dim-bound", dim_bound, "Largest allowed image dimension (default: dim of base)");

  BundleOptions rs_opts;
  std::optional<long> family_k;
  auto* resultant = app.add_subcommand("resultant", "Resultant of the two slope equations");
  add_bundle_options(resultant, rs_opts, false);
  resultant->add_option("--k", family_k, "Also specialize to a = -6k^2, b = 7k^3");

  int dim = 7;
  int rho = 2;
  auto* enumerate = app.add_subcommand("enumerate", "Candidate enumeration for Fano manifolds with two P^2-bundle structures");
  enumerate->add_option("--dim", dim, "Dimension of the total space")->capture_default_str();
  enumerate->add_option("--rho", rho, "Picard number")->capture_default_str();

  std::string fault;
  auto* verify = app.add_subcommand("verify-paper", "Run every self-check");
  verify->add_option("--inject-fault", fault)->check(CLI::IsMember({"grothendieck-sign"}))->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    const auto format = chowkit::parse_format(format_name);
    chowkit::Report report;
    if (*d_classes) {
      report = chowkit::d_classes_report(dc_opts.base, dc_opts.rank, dc_opts.chern, dc_max);
    } else if (*intersect) {
      report = chowkit::intersect_report(is_opts.base, is_opts.rank, is_opts.chern, tau, power, hpower);
    } else if (*slope_system) {
      report = chowkit::slope_system_report(ss_opts.base, ss_opts.rank, ss_opts.chern, dim_bound);
    } else if (*resultant) {
      report = chowkit::resultant_report(rs_opts.base, rs_opts.rank, rs_opts.chern, family_k);
    } else if (*enumerate) {
      report = chowkit::enumerate_report(dim, rho, {k_bound, !no_external});
    } else {
      chowkit::VerifyOptions options;
      if (fault == "grothendieck-sign") options.grothendieck_rule = chowkit::GrothendieckRule::SignFlipped;
      report = chowkit::self_check_report(options);
    }

    const auto text = chowkit::render(report, format);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return kUsageError;
      }
      file << text;
    }
    return chowkit::exit_code(report);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
}
