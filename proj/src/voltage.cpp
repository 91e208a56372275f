#include "iwgraph/voltage.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "iwgraph/errors.hpp"

namespace iwgraph {

VoltageAssignment::VoltageAssignment(Multigraph base, TowerGroupSpec group, std::vector<Word> voltages)
    : base_(std::move(base)), group_(group), words_(std::move(voltages)) {
  group_.validate();
  if (words_.size() != base_.edge_count()) throw ConfigError("voltage assignment must cover every edge");
  for (std::size_t e = 0; e < base_.edge_count(); ++e) {
    tails_.push_back(base_.edge(e).u);
    heads_.push_back(base_.edge(e).v);
    for (const auto& [gen, exp] : words_[e])
      if (gen < 0 || gen >= group_.generator_count())
        throw ConfigError("unknown generator " + std::to_string(gen) + " in voltage of edge " + base_.edge(e).id);
  }
}

VoltageAssignment VoltageAssignment::from_maps(
    Multigraph base, TowerGroupSpec group, const std::map<std::string, Word>& voltages,
    const std::map<std::string, std::pair<std::string, std::string>>& orientation) {
  std::vector<Word> words;
  for (const auto& e : base.edges()) {
    auto it = voltages.find(e.id);
    if (it == voltages.end()) throw ConfigError("edge " + e.id + " has no voltage");
    words.push_back(it->second);
  }
  for (const auto& [id, w] : voltages)
    if (!base.has_edge(id)) throw ConfigError("voltage given for unknown edge " + id);
  for (const auto& [id, ends] : orientation) {
    if (!base.has_edge(id)) throw ConfigError("orientation given for unknown edge " + id);
    const Edge& e = base.edge(base.edge_index(id));
    const std::size_t t = base.vertex_index(ends.first), h = base.vertex_index(ends.second);
    if (t == e.u && h == e.v) continue;
    if (t == e.v && h == e.u) {
      // Reversing the positive direction of e: the word on the listed
      // direction becomes the inverse of the supplied one.
      words[base.edge_index(id)] = inverse_word(words[base.edge_index(id)]);
      continue;
    }
    throw ConfigError("orientation of edge " + id + " does not match its endpoints");
  }
  return VoltageAssignment(std::move(base), group, std::move(words));
}

DerivedGraph::DerivedGraph(int level, FiniteGroup group, Multigraph graph, std::size_t base_vertices,
                           std::vector<GroupElement> elements, std::vector<std::size_t> edge_projection)
    : level_(level),
      group_(std::move(group)),
      graph_(std::move(graph)),
      base_vertices_(base_vertices),
      elements_(std::move(elements)),
      edge_projection_(std::move(edge_projection)) {}

std::size_t DerivedGraph::vertex(std::size_t v, const GroupElement& g) const {
  return v * elements_.size() + group_.index_of(g);
}

std::size_t DerivedGraph::act(const GroupElement& g, std::size_t x) const {
  return vertex(base_vertex(x), group_.multiply(g, label(x)));
}

DerivedGraph derive(const VoltageAssignment& alpha, int level, std::size_t vertex_bound) {
  FiniteGroup group(alpha.group(), level);
  const Multigraph& x = alpha.base();
  const std::size_t order = group.order();
  if (order * x.vertex_count() > vertex_bound)
    throw ResourceError("derived graph with " + std::to_string(order * x.vertex_count()) +
                        " vertices exceeds bound " + std::to_string(vertex_bound));
  auto elements = group.elements(vertex_bound);
  Multigraph cover;
  for (std::size_t v = 0; v < x.vertex_count(); ++v)
    for (const auto& g : elements) cover.add_vertex(x.vertices()[v] + "@" + group.format(g));
  std::vector<std::size_t> projection;
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    const GroupElement a = group.evaluate(alpha.voltage(e));
    for (std::size_t k = 0; k < order; ++k) {
      const GroupElement target = group.multiply(elements[k], a);
      cover.add_edge(x.edge(e).id + "@" + group.format(elements[k]), alpha.tail(e) * order + k,
                     alpha.head(e) * order + group.index_of(target));
      projection.push_back(e);
    }
  }
  return DerivedGraph(level, group, std::move(cover), x.vertex_count(), std::move(elements), std::move(projection));
}

GroupRingMatrix voltage_adjacency(const VoltageAssignment& alpha, int level) {
  FiniteGroup group(alpha.group(), level);
  const Multigraph& x = alpha.base();
  GroupRingMatrix a(group, x.vertex_count());
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    const GroupElement g = group.evaluate(alpha.voltage(e));
    a(alpha.tail(e), alpha.head(e)).add_term(g, 1);
    a(alpha.head(e), alpha.tail(e)).add_term(group.inverse(g), 1);
  }
  return a;
}

namespace {

GroupRingMatrix degree_minus(const VoltageAssignment& alpha, int level, bool transpose) {
  const GroupRingMatrix a = voltage_adjacency(alpha, level);
  const GraphMatrices base = graph_matrices(alpha.base());
  GroupRingMatrix l(a.group(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      GroupRingElement entry = -(transpose ? a(j, i) : a(i, j));
      if (i == j) entry.add_term(a.group().identity(), base.degree(i, i));
      l(i, j) = std::move(entry);
    }
  return l;
}

}  // namespace

GroupRingMatrix voltage_laplacian(const VoltageAssignment& alpha, int level) {
  return degree_minus(alpha, level, true);
}

GroupRingMatrix voltage_laplacian_untransposed(const VoltageAssignment& alpha, int level) {
  return degree_minus(alpha, level, false);
}

Word beta_of_path(const VoltageAssignment& alpha, const std::vector<PathStep>& path) {
  Word w;
  std::size_t at = 0;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const PathStep& s = path[k];
    if (s.edge >= alpha.base().edge_count()) throw std::invalid_argument("path references a missing edge");
    const std::size_t from = s.forward ? alpha.tail(s.edge) : alpha.head(s.edge);
    const std::size_t to = s.forward ? alpha.head(s.edge) : alpha.tail(s.edge);
    if (k > 0 && from != at) throw std::invalid_argument("path is not contiguous at step " + std::to_string(k));
    const Word part = s.forward ? alpha.voltage(s.edge) : inverse_word(alpha.voltage(s.edge));
    w.insert(w.end(), part.begin(), part.end());
    at = to;
  }
  return w;
}

std::vector<std::vector<PathStep>> fundamental_cycles(const VoltageAssignment& alpha) {
  const Multigraph& x = alpha.base();
  const std::size_t n = x.vertex_count();
  std::vector<std::vector<PathStep>> cycles;
  if (n == 0) return cycles;
  // incidence lists in edge order
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    incident[alpha.tail(e)].push_back(e);
    if (alpha.head(e) != alpha.tail(e)) incident[alpha.head(e)].push_back(e);
  }
  // BFS tree from vertex 0; path_to[v] is the tree path root -> v.
  std::vector<bool> seen(n, false);
  std::vector<bool> tree_edge(x.edge_count(), false);
  std::vector<std::vector<PathStep>> path_to(n);
  std::queue<std::size_t> queue;
  seen[0] = true;
  queue.push(0);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for (std::size_t e : incident[v]) {
      const bool forward = alpha.tail(e) == v;
      const std::size_t w = forward ? alpha.head(e) : alpha.tail(e);
      if (seen[w]) continue;
      seen[w] = true;
      tree_edge[e] = true;
      path_to[w] = path_to[v];
      path_to[w].push_back(PathStep{e, forward});
      queue.push(w);
    }
  }
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    if (tree_edge[e] || !seen[alpha.tail(e)]) continue;
    std::vector<PathStep> cycle = path_to[alpha.tail(e)];
    cycle.push_back(PathStep{e, true});
    const auto& back = path_to[alpha.head(e)];
    for (auto it = back.rbegin(); it != back.rend(); ++it) cycle.push_back(PathStep{it->edge, !it->forward});
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

bool connectivity_criterion(const VoltageAssignment& alpha) {
  if (!is_connected(alpha.base())) throw PreconditionError("connectivity criterion requires a connected base graph");
  FiniteGroup g1(alpha.group(), 1);
  std::vector<GroupElement> betas;
  for (const auto& c : fundamental_cycles(alpha)) betas.push_back(g1.evaluate(beta_of_path(alpha, c)));
  return is_generating_set(alpha.group(), betas);
}

void SubgroupSpec::validate(const TowerGroupSpec& spec) const {
  if (spec.is_abelian()) {
    if (quotient_generator < 0 || quotient_generator >= spec.rank)
      throw ConfigError("invalid subgroup: quotient generator " + std::to_string(quotient_generator) +
                        " out of range for abelian rank " + std::to_string(spec.rank));
  } else if (quotient_generator != 1) {
    throw ConfigError("invalid subgroup: for a metacyclic tower only H = <sigma> (quotient generator 1) is normal "
                      "with quotient Z_p");
  }
}

VoltageAssignment quotient_assignment(const VoltageAssignment& alpha, const SubgroupSpec& h) {
  h.validate(alpha.group());
  std::vector<Word> words;
  for (const Word& w : alpha.voltages()) {
    std::int64_t exponent = 0;
    for (const auto& [gen, e] : w)
      if (gen == h.quotient_generator) exponent += e;
    words.push_back(exponent == 0 ? Word{} : Word{{0, exponent}});
  }
  return VoltageAssignment(alpha.base(), TowerGroupSpec::abelian(alpha.group().p, 1), std::move(words));
}

}  // namespace iwgraph
