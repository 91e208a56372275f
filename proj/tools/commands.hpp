#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace iwgraph::cli {

struct CommandOptions {
  std::optional<int> level;
  std::optional<int> max_level;
  std::optional<int> probe_level;
  std::optional<int> count;
};

const std::vector<std::string>& subcommand_names();

/// Runs one subcommand against a parsed config. Library errors propagate
/// unchanged (ConfigError, PreconditionError, ResourceError).
Report run_command(const std::string& name, const JobConfig& cfg, const CommandOptions& opt);

/// Randomized suite for the two identity checks, driven by `seed`.
Report run_random_suite(const std::string& name, std::uint64_t seed, const CommandOptions& opt);

/// Name and hash that a randomized run reports in place of a config.
Provenance random_suite_provenance(const std::string& name, std::uint64_t seed, const CommandOptions& opt);

}  // namespace iwgraph::cli
