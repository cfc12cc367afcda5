#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chowkit/classify.hpp"
#include "chowkit/report.hpp"

namespace chowkit {

// Report builders behind the command-line subcommands. Bad parameters raise
// std::invalid_argument, which the front end maps to a usage error.

/// Chern classes given in generator units; the list length must equal the rank.
BundleData bundle_from_units(const std::string& base, int rank, const std::vector<long>& chern);

/// s_i, d_i and Delta_i for 0 <= i <= max_index (default: dimension of the base).
Report d_classes_report(const std::string& base, int rank, const std::vector<long>& chern,
                        std::optional<int> max_index = std::nullopt);

/// (-K + tau H)^power . H^hpower, with power + hpower = dim P(E).
Report intersect_report(const std::string& base, int rank, const std::vector<long>& chern, const std::string& tau,
                        int power, int hpower);

/// Symbolic rank-3 system when `chern` is empty, numeric otherwise.
/// dim_bound defaults to the base dimension.
Report slope_system_report(const std::string& base, int rank, const std::vector<long>& chern,
                           std::optional<int> dim_bound = std::nullopt);

/// Resultant of the two-equation system; with family_k also the
/// specialization a = -6k^2, b = 7k^3 and its common root.
Report resultant_report(const std::string& base, int rank, const std::vector<long>& chern,
                        std::optional<long> family_k = std::nullopt);

Report enumerate_report(int dim, int rho, const PipelineOptions& options);

}  // namespace chowkit
