#include "iwgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "iwgraph/errors.hpp"

namespace iwgraph {

std::size_t Multigraph::add_vertex(const std::string& id) {
  if (vertex_index_.count(id)) throw ConfigError("duplicate vertex " + id);
  vertex_index_.emplace(id, vertices_.size());
  vertices_.push_back(id);
  return vertices_.size() - 1;
}

std::size_t Multigraph::add_edge(const std::string& id, std::size_t u, std::size_t v) {
  if (edge_index_.count(id)) throw ConfigError("duplicate edge " + id);
  if (u >= vertices_.size() || v >= vertices_.size())
    throw ConfigError("edge " + id + " references a missing vertex");
  edge_index_.emplace(id, edges_.size());
  edges_.push_back(Edge{id, u, v});
  return edges_.size() - 1;
}

std::size_t Multigraph::add_edge(const std::string& id, const std::string& u, const std::string& v) {
  if (!has_vertex(u)) throw ConfigError("unknown vertex " + u + " in edge " + id);
  if (!has_vertex(v)) throw ConfigError("unknown vertex " + v + " in edge " + id);
  return add_edge(id, vertex_index(u), vertex_index(v));
}

std::size_t Multigraph::vertex_index(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw ConfigError("unknown vertex " + id);
  return it->second;
}

std::size_t Multigraph::edge_index(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw ConfigError("unknown edge " + id);
  return it->second;
}

GraphMatrices graph_matrices(const Multigraph& x) {
  const std::size_t n = x.vertex_count();
  GraphMatrices m{IntMatrix(n, n, Integer(0)), IntMatrix(n, n, Integer(0)), x.euler_characteristic()};
  for (const Edge& e : x.edges()) {
    if (e.is_loop()) {
      m.adjacency(e.u, e.u) += 2;
    } else {
      m.adjacency(e.u, e.v) += 1;
      m.adjacency(e.v, e.u) += 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Integer deg = 0;
    for (std::size_t j = 0; j < n; ++j) deg += m.adjacency(i, j);
    m.degree(i, i) = deg;
  }
  return m;
}

std::vector<std::vector<std::size_t>> connected_components(const Multigraph& x) {
  const std::size_t n = x.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const Edge& e : x.edges()) {
    std::size_t a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t v = 0; v < n; ++v) classes[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

bool is_connected(const Multigraph& x) {
  return connected_components(x).size() <= 1;
}

Integer laplacian_principal_minor(const Multigraph& x, std::size_t removed) {
  if (removed >= x.vertex_count()) throw std::out_of_range("laplacian minor index");
  return bareiss_determinant(graph_matrices(x).laplacian().minor(removed, removed));
}

Integer spanning_tree_count(const Multigraph& x) {
  if (x.vertex_count() == 0) return 0;
  return laplacian_principal_minor(x, 0);
}

std::vector<std::vector<std::size_t>> enumerate_spanning_trees(const Multigraph& x) {
  const std::size_t n = x.vertex_count();
  const std::size_t m = x.edge_count();
  if (n > kEnumerateMaxVertices || m > kEnumerateMaxEdges)
    throw ResourceError("spanning tree enumeration limited to 8 vertices and 16 edges");
  std::vector<std::vector<std::size_t>> trees;
  if (n == 0) return trees;
  const std::size_t need = n - 1;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != need) continue;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    bool acyclic = true;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < m && acyclic; ++i) {
      if (!(mask & (1U << i))) continue;
      std::size_t a = find(x.edge(i).u), b = find(x.edge(i).v);
      if (a == b) acyclic = false;  // also rejects loops
      else parent[a] = b;
      chosen.push_back(i);
    }
    // n - 1 acyclic edges on n vertices always span.
    if (acyclic) trees.push_back(std::move(chosen));
  }
  return trees;
}

}  // namespace iwgraph
