#pragma once

#include <string>
#include <utility>
#include <vector>

#include "iwgraph/graph.hpp"
#include "iwgraph/voltage.hpp"

namespace iwgraph::testing {

/// Graph on vertices v0..v{n-1} with edges e0, e1, ... in the given order.
inline Multigraph graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Multigraph x;
  for (std::size_t v = 0; v < n; ++v) x.add_vertex("v" + std::to_string(v));
  for (std::size_t k = 0; k < edges.size(); ++k) x.add_edge("e" + std::to_string(k), edges[k].first, edges[k].second);
  return x;
}

inline Multigraph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return graph(n, edges);
}

inline Multigraph cycle_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return graph(n, edges);
}

/// One vertex with one loop carrying sigma over the rank-1 tower.
inline VoltageAssignment loop_over_zp(std::int64_t p) {
  return VoltageAssignment(graph(1, {{0, 0}}), TowerGroupSpec::abelian(p, 1), {Word{{0, 1}}});
}

}  // namespace iwgraph::testing
