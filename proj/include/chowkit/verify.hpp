#pragma once

#include <cstdint>

#include "chowkit/projbundle.hpp"
#include "chowkit/report.hpp"

namespace chowkit {

struct VerifyOptions {
  /// Relation used by the Grothendieck check; SignFlipped must make it fail.
  GrothendieckRule grothendieck_rule = GrothendieckRule::Standard;
  std::uint64_t corpus_seed = 20260417;
  std::size_t corpus_size = 120;
};

/// Runs the full self-check suite: one row per criterion plus the
/// externally assumed facts. exit_code(report) is 0 iff nothing failed.
Report self_check_report(const VerifyOptions& options = {});

}  // namespace chowkit
