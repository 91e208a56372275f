#include "iwgraph/random_instances.hpp"

#include <stdexcept>
#include <string>

namespace iwgraph {
namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Multigraph random_connected_multigraph(std::mt19937_64& rng, std::size_t vertices, std::size_t edges,
                                       bool allow_loops) {
  if (vertices == 0) throw std::invalid_argument("a connected graph needs a vertex");
  if (edges + 1 < vertices) throw std::invalid_argument("too few edges for a connected graph");
  if (vertices == 1 && edges > 0 && !allow_loops) throw std::invalid_argument("one vertex needs loops");
  Multigraph x;
  for (std::size_t v = 0; v < vertices; ++v) x.add_vertex("v" + std::to_string(v));
  std::size_t id = 0;
  for (std::size_t v = 1; v < vertices; ++v) {
    const std::size_t w = uniform(rng, 0, v - 1);
    if (uniform(rng, 0, 1)) x.add_edge("e" + std::to_string(id++), v, w);
    else x.add_edge("e" + std::to_string(id++), w, v);
  }
  while (id < edges) {
    const std::size_t a = uniform(rng, 0, vertices - 1), b = uniform(rng, 0, vertices - 1);
    if (a == b && !allow_loops) continue;
    x.add_edge("e" + std::to_string(id++), a, b);
  }
  return x;
}

Word random_word(std::mt19937_64& rng, const TowerGroupSpec& spec) {
  Word w;
  const std::size_t len = uniform(rng, 0, 2);
  for (std::size_t i = 0; i < len; ++i) {
    const int gen = static_cast<int>(uniform(rng, 0, static_cast<std::size_t>(spec.generator_count() - 1)));
    const std::int64_t exp = std::uniform_int_distribution<std::int64_t>(-3, 3)(rng);
    if (exp != 0) w.emplace_back(gen, exp);
  }
  return w;
}

RandomInstance random_abelian_instance(std::mt19937_64& rng, const RandomInstanceLimits& limits) {
  for (;;) {
    const std::int64_t p = limits.primes.at(uniform(rng, 0, limits.primes.size() - 1));
    const int level = static_cast<int>(uniform(rng, 1, static_cast<std::size_t>(limits.max_level)));
    // largest rank keeping p^(level * rank) within the order limit
    const auto step = static_cast<std::size_t>(ipow64(p, level));
    int max_rank = 0;
    for (std::size_t order = step; order <= limits.max_group_order; order *= step) ++max_rank;
    if (max_rank == 0) continue;
    const int rank = static_cast<int>(uniform(rng, 1, static_cast<std::size_t>(max_rank)));
    const std::size_t group_order = static_cast<std::size_t>(ipow64(p, level * rank));
    std::size_t vmax = limits.max_vertices;
    while (vmax > 1 && vmax * group_order > limits.max_cover_vertices) --vmax;
    if (vmax * group_order > limits.max_cover_vertices) continue;
    const std::size_t v = uniform(rng, 1, vmax);
    const std::size_t emin = std::max<std::size_t>(v - 1, limits.allow_loops ? 1 : 0);
    if (emin > limits.max_edges || (v == 1 && !limits.allow_loops)) continue;
    const std::size_t e = uniform(rng, emin, limits.max_edges);
    const TowerGroupSpec spec = TowerGroupSpec::abelian(p, rank);
    Multigraph x = random_connected_multigraph(rng, v, e, limits.allow_loops);
    std::vector<Word> words;
    for (std::size_t k = 0; k < x.edge_count(); ++k) words.push_back(random_word(rng, spec));
    return RandomInstance{VoltageAssignment(std::move(x), spec, std::move(words)), level};
  }
}

}  // namespace iwgraph
