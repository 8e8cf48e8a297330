#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sldist/cli/report.hpp"
#include "sldist/groups/enumerated_group.hpp"

namespace sldist::cli {

struct RunConfig {
  int n = 2;
  std::uint32_t q = 2;
  std::uint64_t max_group_order = groups::EnumeratedGroup::kDefaultMaxOrder;
  std::uint64_t seed = 0x5eed;
  Format format = Format::Json;
  /// Empty: see resolve_cache_dir.
  std::string cache_dir;
  /// Empty: standard output.
  std::string out;

  /// Throws std::invalid_argument unless n >= 1 and q is a prime power.
  void validate() const;
};

/// Exit codes shared by all commands.
enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kUsageError = 2, kSizeGuard = 3 };

/// Builds (or reloads) the table of one group kind.  Prints a summary line
/// to out, "cache hit (verified)" on a reload.
int cmd_build_table(const RunConfig& config, groups::GroupKind kind, std::ostream& out);

/// Writes the distinction report in config.format to config.out, or to out.
int cmd_distinction(const RunConfig& config, std::ostream& out);

/// Runs the selected verdicts and prints one line each.  With config.out set,
/// also writes the JSON report there.  Nonzero iff an asserted verdict fails.
int cmd_verify(const RunConfig& config, const std::vector<distinction::Proposition>& props, std::ostream& out);

/// Context whose GL_n(E) and SL_n(E) tables go through the cache.
std::shared_ptr<const distinction::DistinctionContext> cached_context(const RunConfig& config, std::ostream& log);

}  // namespace sldist::cli
