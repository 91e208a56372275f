#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "iwgraph/integer.hpp"
#include "iwgraph/matrix.hpp"

namespace iwgraph {

struct Edge {
  std::string id;
  std::size_t u = 0;  // index of the first listed endpoint
  std::size_t v = 0;  // index of the second listed endpoint
  bool is_loop() const { return u == v; }
};

/// Finite undirected multigraph; loops and parallel edges allowed.
///
/// Vertices and edges keep insertion order, and every matrix produced from a
/// graph is indexed by that order.
class Multigraph {
 public:
  Multigraph() = default;

  /// Adds a vertex and returns its index. Throws ConfigError on duplicates.
  std::size_t add_vertex(const std::string& id);
  /// Adds an edge between two existing vertex indices.
  std::size_t add_edge(const std::string& id, std::size_t u, std::size_t v);
  /// Adds an edge between two existing vertex identifiers.
  std::size_t add_edge(const std::string& id, const std::string& u, const std::string& v);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  bool has_vertex(const std::string& id) const { return vertex_index_.count(id) != 0; }
  std::size_t vertex_index(const std::string& id) const;
  bool has_edge(const std::string& id) const { return edge_index_.count(id) != 0; }
  std::size_t edge_index(const std::string& id) const;

  /// |V| - |E|.
  std::int64_t euler_characteristic() const {
    return static_cast<std::int64_t>(vertices_.size()) - static_cast<std::int64_t>(edges_.size());
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> edge_index_;
};

struct GraphMatrices {
  IntMatrix adjacency;  // A; the diagonal counts each loop twice
  IntMatrix degree;     // D, diagonal; loops contribute 2
  std::int64_t chi = 0;

  /// D - A.
  IntMatrix laplacian() const { return degree - adjacency; }
};

GraphMatrices graph_matrices(const Multigraph& x);

/// Connectivity classes as sorted lists of vertex indices, ordered by their
/// smallest member.
std::vector<std::vector<std::size_t>> connected_components(const Multigraph& x);

bool is_connected(const Multigraph& x);

/// Number of spanning trees (matrix-tree theorem); 0 for disconnected graphs
/// with more than one vertex.
Integer spanning_tree_count(const Multigraph& x);

/// Determinant of D - A with row and column `removed` deleted.
Integer laplacian_principal_minor(const Multigraph& x, std::size_t removed);

inline constexpr std::size_t kEnumerateMaxVertices = 8;
inline constexpr std::size_t kEnumerateMaxEdges = 16;

/// Every spanning tree as a sorted list of edge indices, found by exhaustive
/// search over edge subsets of size |V| - 1. Throws ResourceError above
/// 8 vertices or 16 edges.
std::vector<std::vector<std::size_t>> enumerate_spanning_trees(const Multigraph& x);

}  // namespace iwgraph
