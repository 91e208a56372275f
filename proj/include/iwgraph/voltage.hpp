#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "iwgraph/graph.hpp"
#include "iwgraph/group.hpp"
#include "iwgraph/group_ring.hpp"

namespace iwgraph {

/// Voltage assignment on the oriented section S of a base graph.
///
/// Each edge carries a level-independent word in the tower generators and a
/// positive direction tail -> head; by default the direction is the listed
/// endpoint order. Traversing an edge backwards uses the inverse voltage.
class VoltageAssignment {
 public:
  /// `voltages[e]` is the word on edge e, oriented from its first to its
  /// second listed endpoint.
  VoltageAssignment(Multigraph base, TowerGroupSpec group, std::vector<Word> voltages);

  /// Builds from edge-id keyed maps. `orientation` may override the positive
  /// direction of any edge with an explicit (tail, head) vertex pair.
  static VoltageAssignment from_maps(
      Multigraph base, TowerGroupSpec group, const std::map<std::string, Word>& voltages,
      const std::map<std::string, std::pair<std::string, std::string>>& orientation = {});

  const Multigraph& base() const { return base_; }
  const TowerGroupSpec& group() const { return group_; }
  std::size_t tail(std::size_t e) const { return tails_.at(e); }
  std::size_t head(std::size_t e) const { return heads_.at(e); }
  const Word& voltage(std::size_t e) const { return words_.at(e); }
  const std::vector<Word>& voltages() const { return words_; }

 private:
  Multigraph base_;
  TowerGroupSpec group_;
  std::vector<std::size_t> tails_;
  std::vector<std::size_t> heads_;
  std::vector<Word> words_;
};

/// The derived graph X_n with vertices (v, g), g in G^(n).
///
/// Vertex (v, g) has index v * |G^(n)| + index_of(g). Every base edge
/// e: v -> w with voltage a lifts to the |G^(n)| edges (v, h) -- (w, h a).
class DerivedGraph {
 public:
  DerivedGraph(int level, FiniteGroup group, Multigraph graph, std::size_t base_vertices,
               std::vector<GroupElement> elements, std::vector<std::size_t> edge_projection);

  int level() const { return level_; }
  const FiniteGroup& group() const { return group_; }
  const Multigraph& graph() const { return graph_; }
  std::size_t base_vertex_count() const { return base_vertices_; }
  const std::vector<GroupElement>& elements() const { return elements_; }

  std::size_t vertex(std::size_t v, const GroupElement& g) const;
  std::size_t base_vertex(std::size_t x) const { return x / elements_.size(); }
  const GroupElement& label(std::size_t x) const { return elements_.at(x % elements_.size()); }
  /// Base edge under each derived edge.
  const std::vector<std::size_t>& edge_projection() const { return edge_projection_; }
  /// The Galois action (v, h) -> (v, g h).
  std::size_t act(const GroupElement& g, std::size_t x) const;

 private:
  int level_;
  FiniteGroup group_;
  Multigraph graph_;
  std::size_t base_vertices_;
  std::vector<GroupElement> elements_;
  std::vector<std::size_t> edge_projection_;
};

inline constexpr std::size_t kDefaultDeriveBound = 4096;

/// Builds X_n. Throws ResourceError if |G^(n)| |V(X)| exceeds `vertex_bound`.
DerivedGraph derive(const VoltageAssignment& alpha, int level, std::size_t vertex_bound = kDefaultDeriveBound);

/// A_alpha over Z[G^(n)]: entry (i, j) sums the voltages of the directed
/// edges v_i -> v_j; a loop with voltage a contributes a + a^-1.
GroupRingMatrix voltage_adjacency(const VoltageAssignment& alpha, int level);

/// D - A_alpha^t, the presentation matrix of the Picard module.
GroupRingMatrix voltage_laplacian(const VoltageAssignment& alpha, int level);

/// D - A_alpha.
GroupRingMatrix voltage_laplacian_untransposed(const VoltageAssignment& alpha, int level);

struct PathStep {
  std::size_t edge = 0;
  bool forward = true;  // tail -> head
};

/// Ordered product of voltages along a path, inverting backward steps.
/// Throws std::invalid_argument if consecutive steps do not meet.
Word beta_of_path(const VoltageAssignment& alpha, const std::vector<PathStep>& path);

/// Fundamental cycles through the first vertex: one per non-tree edge of a
/// breadth-first spanning tree, as closed paths.
std::vector<std::vector<PathStep>> fundamental_cycles(const VoltageAssignment& alpha);

/// True iff the beta-values of the fundamental cycles generate G^(1), which
/// makes every X_n connected. Throws PreconditionError if X is disconnected.
bool connectivity_criterion(const VoltageAssignment& alpha);

/// A normal sub-tower H with G/H = Z_p, named by the one generator coordinate
/// that survives in the quotient. Abelian towers accept any coordinate;
/// metacyclic towers accept only tau (H = <sigma>).
struct SubgroupSpec {
  int quotient_generator = 0;

  void validate(const TowerGroupSpec& spec) const;
};

/// The composite assignment S -> G -> G/H = Z_p, over the rank-1 abelian tower.
VoltageAssignment quotient_assignment(const VoltageAssignment& alpha, const SubgroupSpec& h);

}  // namespace iwgraph
