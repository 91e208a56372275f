#pragma once

#include <array>
#include <string_view>

namespace iwgraph {

inline constexpr std::string_view kVersion = "0.1.0";

/// Module names with their versions; every module is versioned with the library.
inline constexpr std::array<std::string_view, 8> kModules{
    "graph-core", "group-core", "group-ring", "voltage-cover", "jacobian", "zeta-lfun", "iwasawa", "cli"};

}  // namespace iwgraph
