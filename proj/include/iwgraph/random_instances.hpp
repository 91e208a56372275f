#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "iwgraph/graph.hpp"
#include "iwgraph/group.hpp"
#include "iwgraph/voltage.hpp"

namespace iwgraph {

/// Shape limits for randomly drawn voltage instances.
struct RandomInstanceLimits {
  std::vector<std::int64_t> primes{2, 3};
  std::size_t max_vertices = 5;
  std::size_t max_edges = 8;
  std::size_t max_group_order = 27;  // |G^(level)|
  int max_level = 2;
  /// Upper bound on |G^(level)| * |V|, which sizes the derived graph.
  std::size_t max_cover_vertices = 4096;
  bool allow_loops = true;
};

struct RandomInstance {
  VoltageAssignment alpha;
  int level = 0;
};

/// Connected multigraph on `vertices` vertices with `edges` edges (at least
/// vertices - 1): a random spanning tree plus random extra edges, which may
/// be loops or parallel edges.
Multigraph random_connected_multigraph(std::mt19937_64& rng, std::size_t vertices, std::size_t edges,
                                       bool allow_loops = true);

/// Random word of length <= 2 in the tower generators, exponents in [-3, 3].
Word random_word(std::mt19937_64& rng, const TowerGroupSpec& spec);

/// A random abelian instance within the limits.
RandomInstance random_abelian_instance(std::mt19937_64& rng, const RandomInstanceLimits& limits = {});

}  // namespace iwgraph
