#include <algorithm>
#include <random>

#include "doctest.h"
#include "iwgraph/errors.hpp"
#include "iwgraph/random_instances.hpp"
#include "iwgraph/voltage.hpp"
#include "support.hpp"

using namespace iwgraph;
using iwgraph::testing::graph;
using iwgraph::testing::loop_over_zp;

namespace {

using EdgeKey = std::pair<std::size_t, std::size_t>;

std::vector<EdgeKey> edge_multiset(const Multigraph& x) {
  std::vector<EdgeKey> out;
  for (const auto& e : x.edges()) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(out.begin(), out.end());
  return out;
}

// The two-vertex, nine-edge metacyclic example with voltages
// sigma x3, tau x3, 1 x3 over p = 3.
VoltageAssignment mu_two_example() {
  std::vector<std::pair<std::size_t, std::size_t>> edges(9, {0, 1});
  std::vector<Word> w;
  for (int k = 0; k < 3; ++k) w.push_back({{0, 1}});
  for (int k = 0; k < 3; ++k) w.push_back({{1, 1}});
  for (int k = 0; k < 3; ++k) w.push_back({});
  return VoltageAssignment(graph(2, edges), TowerGroupSpec::metacyclic(3), w);
}

}  // namespace

TEST_CASE("derived graph basics") {
  // trivial voltages give p disjoint copies
  const VoltageAssignment trivial(iwgraph::testing::cycle_graph(3), TowerGroupSpec::abelian(3, 1), {{}, {}, {}});
  const DerivedGraph d = derive(trivial, 1);
  CHECK(d.graph().vertex_count() == 9);
  CHECK(connected_components(d.graph()).size() == 3);

  // a loop with a generating voltage unrolls into a cycle of length p^n
  const DerivedGraph c = derive(loop_over_zp(3), 2);
  CHECK(c.graph().vertex_count() == 9);
  CHECK(is_connected(c.graph()));
  const GraphMatrices gm = graph_matrices(c.graph());
  for (std::size_t i = 0; i < 9; ++i) CHECK(gm.degree(i, i) == 2);
  CHECK(spanning_tree_count(c.graph()) == 9);

  CHECK_THROWS_AS(derive(loop_over_zp(3), 3, 10), ResourceError);
}

TEST_CASE("voltage laplacian") {
  const auto l = voltage_laplacian(loop_over_zp(3), 2);
  FiniteGroup g(TowerGroupSpec::abelian(3, 1), 2);
  GroupRingElement expected(g, Integer(2));
  expected.add_term(g.generator(0), -1);
  expected.add_term(g.inverse(g.generator(0)), -1);
  CHECK(l(0, 0) == expected);

  // mu = 2 example: every entry divisible by 3
  const auto alpha = mu_two_example();
  const auto m = voltage_laplacian(alpha, 1);
  FiniteGroup meta(alpha.group(), 1);
  CHECK(m(0, 0) == GroupRingElement(meta, Integer(9)));
  CHECK(m(1, 1) == GroupRingElement(meta, Integer(9)));
  GroupRingElement off(meta);
  off.add_term(meta.generator(0), -3);
  off.add_term(meta.generator(1), -3);
  off.add_term(meta.identity(), -3);
  CHECK(m(1, 0) == off);       // -A^t puts the tail->head voltages below the diagonal
  CHECK(m(0, 1) == off.involution());
}

TEST_CASE("augmented voltage laplacian is the graph laplacian") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 15; ++t) {
    const auto inst = random_abelian_instance(rng);
    CHECK(voltage_laplacian(inst.alpha, inst.level).augmentation() == graph_matrices(inst.alpha.base()).laplacian());
  }
}

TEST_CASE("beta of paths") {
  const VoltageAssignment alpha(graph(2, {{0, 1}, {1, 0}}), TowerGroupSpec::abelian(3, 2), {{{0, 1}}, {{1, 2}}});
  CHECK(beta_of_path(alpha, {}).empty());
  CHECK(beta_of_path(alpha, {{0, true}}) == Word{{0, 1}});
  CHECK(beta_of_path(alpha, {{0, false}}) == Word{{0, -1}});
  CHECK(beta_of_path(alpha, {{0, true}, {1, true}}) == Word{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(beta_of_path(alpha, {{0, true}, {0, true}}), std::invalid_argument);
}

TEST_CASE("connectivity criterion") {
  CHECK(connectivity_criterion(loop_over_zp(3)));
  const VoltageAssignment tree(graph(2, {{0, 1}}), TowerGroupSpec::abelian(2, 1), {{{0, 1}}});
  CHECK_FALSE(connectivity_criterion(tree));
  const VoltageAssignment split(graph(2, {}), TowerGroupSpec::abelian(2, 1), {});
  CHECK_THROWS_AS(connectivity_criterion(split), PreconditionError);
  CHECK(connectivity_criterion(mu_two_example()));
}

TEST_CASE("galois action, quotient and tower compatibility") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 10; ++t) {
    const auto inst = random_abelian_instance(rng);
    const DerivedGraph d = derive(inst.alpha, inst.level);
    const auto edges = edge_multiset(d.graph());
    for (const auto& g : d.elements()) {
      std::vector<EdgeKey> moved;
      for (const auto& e : d.graph().edges()) {
        const std::size_t a = d.act(g, e.u), b = d.act(g, e.v);
        moved.emplace_back(std::min(a, b), std::max(a, b));
      }
      std::sort(moved.begin(), moved.end());
      CHECK(moved == edges);
    }
    // each base edge has exactly |G| lifts
    std::vector<std::size_t> counts(inst.alpha.base().edge_count(), 0);
    for (std::size_t e : d.edge_projection()) ++counts[e];
    for (std::size_t c : counts) CHECK(c == d.elements().size());
    // projecting the level-n cover reproduces the level-(n-1) cover |G^(n)|/|G^(n-1)| times
    if (inst.level >= 1) {
      const DerivedGraph lower = derive(inst.alpha, inst.level - 1);
      std::vector<EdgeKey> projected;
      for (const auto& e : d.graph().edges()) {
        const auto pu = lower.vertex(d.base_vertex(e.u), project(inst.alpha.group(), d.label(e.u), inst.level - 1));
        const auto pv = lower.vertex(d.base_vertex(e.v), project(inst.alpha.group(), d.label(e.v), inst.level - 1));
        projected.emplace_back(std::min(pu, pv), std::max(pu, pv));
      }
      std::sort(projected.begin(), projected.end());
      std::vector<EdgeKey> expected;
      const std::size_t ratio = d.elements().size() / lower.elements().size();
      for (const auto& k : edge_multiset(lower.graph()))
        for (std::size_t r = 0; r < ratio; ++r) expected.push_back(k);
      std::sort(expected.begin(), expected.end());
      CHECK(projected == expected);
    }
  }
}

TEST_CASE("criterion soundness on random instances") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto inst = random_abelian_instance(rng);
    if (!connectivity_criterion(inst.alpha)) continue;
    for (int n = 0; n <= 2; ++n) {
      if (FiniteGroup(inst.alpha.group(), n).order() * inst.alpha.base().vertex_count() > 2000) break;
      CHECK(is_connected(derive(inst.alpha, n).graph()));
    }
  }
}

TEST_CASE("voltage maps and orientation") {
  Multigraph x;
  x.add_vertex("a");
  x.add_vertex("b");
  x.add_edge("e1", "a", "b");
  x.add_edge("e2", "a", "b");
  const auto spec = TowerGroupSpec::abelian(3, 1);
  CHECK_THROWS_WITH_AS(VoltageAssignment::from_maps(x, spec, {{"e1", {{0, 1}}}}), "edge e2 has no voltage", ConfigError);
  CHECK_THROWS_AS(VoltageAssignment::from_maps(x, spec, {{"e1", {{1, 1}}}, {"e2", {}}}), ConfigError);
  const auto flipped = VoltageAssignment::from_maps(x, spec, {{"e1", {{0, 1}}}, {"e2", {}}}, {{"e1", {"b", "a"}}});
  CHECK(flipped.voltage(0) == Word{{0, -1}});
  CHECK(flipped.tail(0) == 0);
  CHECK_THROWS_AS(VoltageAssignment::from_maps(x, spec, {{"e1", {}}, {"e2", {}}}, {{"e1", {"a", "a"}}}), ConfigError);
}

TEST_CASE("quotient assignments") {
  const auto alpha = mu_two_example();
  const auto q = quotient_assignment(alpha, SubgroupSpec{1});
  CHECK(q.group() == TowerGroupSpec::abelian(3, 1));
  CHECK(q.voltage(0).empty());
  CHECK(q.voltage(3) == Word{{0, 1}});
  CHECK(q.voltage(8).empty());
  CHECK_THROWS_AS(quotient_assignment(alpha, SubgroupSpec{0}), ConfigError);

  const VoltageAssignment ab(graph(1, {{0, 0}}), TowerGroupSpec::abelian(3, 2), {{{0, 2}, {1, 1}}});
  CHECK(quotient_assignment(ab, SubgroupSpec{0}).voltage(0) == Word{{0, 2}});
  CHECK(quotient_assignment(ab, SubgroupSpec{1}).voltage(0) == Word{{0, 1}});
  CHECK_THROWS_AS(quotient_assignment(ab, SubgroupSpec{2}), ConfigError);
}
