#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "iwgraph/group_ring.hpp"
#include "iwgraph/voltage.hpp"

namespace iwgraph::cli {

/// A representation supplied in the config, given by the images of the
/// generators at a fixed level.
struct RepresentationConfig {
  std::string name;
  int level = 0;
  std::vector<CycMatrix> generator_images;

  Representation build(const TowerGroupSpec& spec) const;
};

struct JobConfig {
  std::string name;
  std::string sha256;  // of the raw config bytes
  VoltageAssignment alpha;
  std::optional<SubgroupSpec> subgroup;
  std::optional<int> level;
  std::optional<int> max_level;
  std::optional<std::string> out_dir;
  std::vector<RepresentationConfig> representations;
};

/// Parses and validates a JSON job description. All failures are ConfigError.
JobConfig parse_config_text(const std::string& text);
JobConfig parse_config(const std::filesystem::path& path);

std::string sha256_hex(const std::string& bytes);

}  // namespace iwgraph::cli
