#include <random>

#include "doctest.h"
#include "iwgraph/errors.hpp"
#include "iwgraph/group_ring.hpp"
#include "iwgraph/polynomial.hpp"

using namespace iwgraph;

namespace {

GroupRingElement random_element(std::mt19937_64& rng, const FiniteGroup& g, int terms = 3) {
  const auto elems = g.elements(4096);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  GroupRingElement x(g);
  for (int t = 0; t < terms; ++t) x.add_term(elems[pick(rng)], coeff(rng));
  return x;
}

GroupRingMatrix random_matrix(std::mt19937_64& rng, const FiniteGroup& g, std::size_t n) {
  GroupRingMatrix m(g, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_element(rng, g);
  return m;
}

CyclotomicInteger zeta(std::int64_t p, int k, std::int64_t e = 1) { return CyclotomicInteger::zeta_power(p, k, e); }

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  const auto z3 = zeta(3, 1);
  CHECK(z3 * z3 * z3 == CyclotomicInteger(1));
  CHECK(CyclotomicInteger(1) + z3 + z3 * z3 == CyclotomicInteger(0));
  CHECK((CyclotomicInteger(1) - z3).norm() == 3);
  CHECK((CyclotomicInteger(1) - zeta(3, 2)).norm() == 3);
  CHECK(zeta(2, 1) == CyclotomicInteger(-1));
  CHECK(zeta(3, 2, 3) == z3);  // lifting across conductors
  CHECK(z3.conj() == z3 * z3);
  const auto a = CyclotomicInteger(2) + zeta(3, 2, 2);
  const auto b = CyclotomicInteger(1) - zeta(3, 2, 5);
  CHECK(CyclotomicInteger::exact_div(a * b, b) == a);
  CHECK_THROWS_AS(CyclotomicInteger::exact_div(CyclotomicInteger(1), CyclotomicInteger(1) - z3), std::domain_error);
}

TEST_CASE("galois action is a ring automorphism") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int t = 0; t < 20; ++t) {
    std::vector<Integer> ca(6), cb(6);
    for (auto& x : ca) x = c(rng);
    for (auto& x : cb) x = c(rng);
    const CyclotomicInteger a(3, 2, ca), b(3, 2, cb);
    for (std::int64_t s : {2, 4, 5, 7, 8}) {
      CHECK((a * b).galois(s) == a.galois(s) * b.galois(s));
      CHECK((a + b).galois(s) == a.galois(s) + b.galois(s));
    }
  }
}

TEST_CASE("polynomial arithmetic and exact division") {
  const IntPolynomial x = IntPolynomial::monomial(1, 1);
  const IntPolynomial f = (IntPolynomial(1) - x) * (IntPolynomial(1) + x + x * x);
  CHECK(f == IntPolynomial(std::vector<Integer>{1, 0, 0, -1}));
  CHECK(IntPolynomial::exact_div(f, IntPolynomial(1) - x) == IntPolynomial(1) + x + x * x);
  CHECK_THROWS_AS(IntPolynomial::exact_div(f, IntPolynomial(2) - x), std::domain_error);
  CHECK(f.compose(IntPolynomial(1) + x) == -(x * x * x) - IntPolynomial(3) * x * x - IntPolynomial(3) * x);
  CHECK(to_string(f) == "1 - u^3");
  CHECK(IntPolynomial().degree() == -1);
}

TEST_CASE("group ring arithmetic") {
  FiniteGroup z2(TowerGroupSpec::abelian(2, 1), 1);
  const GroupRingElement one(z2, Integer(1));
  const GroupRingElement s(z2, z2.generator(0));
  CHECK(((one + s) * (one - s)).is_zero());
  CHECK(one * s == s);

  FiniteGroup meta(TowerGroupSpec::metacyclic(3, 4), 2);
  const GroupRingElement sigma(meta, meta.generator(0)), tau(meta, meta.generator(1));
  CHECK((sigma * tau).terms().begin()->first == GroupElement{2, {1, 1}});
  CHECK((tau * sigma).terms().begin()->first == GroupElement{2, {4, 1}});

  FiniteGroup other(TowerGroupSpec::abelian(2, 1), 2);
  CHECK_THROWS(one + GroupRingElement(other, Integer(1)));
}

TEST_CASE("character evaluation") {
  const auto spec3 = TowerGroupSpec::abelian(3, 1);
  FiniteGroup z3(spec3, 1);
  const GroupRingElement one(z3, Integer(1)), s(z3, z3.generator(0));
  const Character triv{1, {0}}, chi{1, {1}};
  CHECK(character_evaluate(triv, one + s + s) == CyclotomicInteger(3));
  CHECK(character_evaluate(chi, one + s) == CyclotomicInteger(1) + zeta(3, 1));

  const auto spec2 = TowerGroupSpec::abelian(2, 1);
  FiniteGroup z2(spec2, 1);
  const GroupRingElement t(z2, z2.generator(0));
  CHECK(character_evaluate(Character{1, {1}}, GroupRingElement(z2, Integer(2)) - t) == CyclotomicInteger(3));

  FiniteGroup meta(TowerGroupSpec::metacyclic(3), 1);
  CHECK_THROWS_AS(character_evaluate(Character{1, {0, 0}}, GroupRingElement(meta, Integer(1))), PreconditionError);
  CHECK_THROWS_AS(enumerate_characters(TowerGroupSpec::metacyclic(3), 1), PreconditionError);
}

TEST_CASE("character evaluation is a ring homomorphism") {
  std::mt19937_64 rng(8);
  const auto spec = TowerGroupSpec::abelian(3, 2);
  FiniteGroup g(spec, 1);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_element(rng, g), b = random_element(rng, g);
    for (const auto& chi : enumerate_characters(spec, 1)) {
      CHECK(character_evaluate(chi, a * b) == character_evaluate(chi, a) * character_evaluate(chi, b));
      CHECK(character_evaluate(chi, a + b) == character_evaluate(chi, a) + character_evaluate(chi, b));
    }
  }
}

TEST_CASE("reduced norms of small matrices") {
  const auto spec = TowerGroupSpec::abelian(2, 1);
  FiniteGroup z2(spec, 1);
  GroupRingMatrix m(z2, 1);
  m(0, 0) = GroupRingElement(z2, z2.generator(0));
  const auto nrd = nrd_abelian(m);
  REQUIRE(nrd.size() == 2);
  CHECK(nrd[0].second == CyclotomicInteger(1));
  CHECK(nrd[1].second == CyclotomicInteger(-1));
  CHECK(regular_det(m) == -1);

  GroupRingMatrix two(z2, 1);
  two(0, 0) = GroupRingElement(z2, Integer(2));
  CHECK(regular_det(two) == 4);

  FiniteGroup trivial(spec, 0);
  GroupRingMatrix t(trivial, 2);
  t(0, 0) = GroupRingElement(trivial, Integer(2));
  t(0, 1) = GroupRingElement(trivial, Integer(1));
  t(1, 0) = GroupRingElement(trivial, Integer(5));
  t(1, 1) = GroupRingElement(trivial, Integer(3));
  const auto nt = nrd_abelian(t);
  REQUIRE(nt.size() == 1);
  CHECK(nt[0].second == CyclotomicInteger(1));
}

TEST_CASE("regular determinant equals the product of character components") {
  std::mt19937_64 rng(99);
  for (const auto& [spec, level] : std::vector<std::pair<TowerGroupSpec, int>>{
           {TowerGroupSpec::abelian(3, 1), 1}, {TowerGroupSpec::abelian(2, 2), 1}, {TowerGroupSpec::abelian(2, 1), 2},
           {TowerGroupSpec::abelian(3, 1), 2}}) {
    FiniteGroup g(spec, level);
    for (int t = 0; t < 6; ++t) {
      const auto m = random_matrix(rng, g, 2);
      CyclotomicInteger product(1);
      for (const auto& [chi, d] : nrd_abelian(m)) product = product * d;
      CHECK(product == CyclotomicInteger(regular_det(m)));
    }
  }
}

TEST_CASE("Nrd projection compatibility") {
  std::mt19937_64 rng(4);
  const auto spec = TowerGroupSpec::abelian(3, 1);
  FiniteGroup g2(spec, 2);
  for (int t = 0; t < 8; ++t) {
    const auto m = random_matrix(rng, g2, 2);
    const auto high = nrd_abelian(m);
    for (int level = 0; level <= 1; ++level)
      for (const auto& [chi, d] : nrd_abelian(m.projected(level))) {
        const Character lifted = inflate(spec, chi, 2);
        bool found = false;
        for (const auto& [chi2, d2] : high)
          if (chi2 == lifted) {
            CHECK(d2 == d);
            found = true;
          }
        CHECK(found);
      }
  }
}

TEST_CASE("Nrd of block lower-triangular matrices") {
  std::mt19937_64 rng(12);
  const auto spec = TowerGroupSpec::abelian(2, 2);
  FiniteGroup g(spec, 1);
  for (int t = 0; t < 8; ++t) {
    const auto c = random_matrix(rng, g, 2);
    const auto a = random_element(rng, g);
    GroupRingMatrix b(g, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) b(i, j) = c(i, j);
    b(2, 0) = random_element(rng, g);
    b(2, 1) = random_element(rng, g);
    b(2, 2) = a;
    GroupRingMatrix a1(g, 1);
    a1(0, 0) = a;
    const auto nb = nrd_abelian(b), nc = nrd_abelian(c), na = nrd_abelian(a1);
    for (std::size_t k = 0; k < nb.size(); ++k) CHECK(nb[k].second == nc[k].second * na[k].second);
  }
}

TEST_CASE("Nrd is multiplicative") {
  std::mt19937_64 rng(21);
  const auto spec = TowerGroupSpec::abelian(3, 1);
  FiniteGroup g(spec, 1);
  for (int t = 0; t < 6; ++t) {
    const auto a = random_matrix(rng, g, 2), b = random_matrix(rng, g, 2);
    const auto nab = nrd_abelian(a * b), na = nrd_abelian(a), nb = nrd_abelian(b);
    for (std::size_t k = 0; k < nab.size(); ++k) CHECK(nab[k].second == na[k].second * nb[k].second);
  }
}

TEST_CASE("representations") {
  const auto spec = TowerGroupSpec::abelian(3, 1);
  FiniteGroup g(spec, 1);
  const auto rho = Representation::from_character(spec, Character{1, {1}});
  CHECK(rho.dimension() == 1);
  CHECK(rho.image(g.generator(0))(0, 0) == zeta(3, 1));

  // A faithful 3-dimensional representation of the metacyclic group of
  // order 9 (u = 4 acts trivially mod 3, so the level-1 group is abelian);
  // sigma -> diag(z, z, z), tau -> cyclic permutation.
  const auto meta = TowerGroupSpec::metacyclic(3);
  FiniteGroup m1(meta, 1);
  CycMatrix s(3, 3), t(3, 3, CyclotomicInteger(0));
  for (std::size_t i = 0; i < 3; ++i) s(i, i) = zeta(3, 1);
  for (std::size_t i = 0; i < 3; ++i) t((i + 1) % 3, i) = CyclotomicInteger(1);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) s(i, j) = CyclotomicInteger(0);
  CHECK_NOTHROW(Representation(m1, {s, t}, "rho3"));

  CycMatrix bad(1, 1);
  bad(0, 0) = CyclotomicInteger(2);
  CHECK_THROWS_AS(Representation(g, {bad}, "bad"), ConfigError);
}

TEST_CASE("group ring helpers") {
  const auto spec = TowerGroupSpec::abelian(3, 1);
  FiniteGroup g(spec, 2);
  GroupRingElement x(g);
  x.add_term(g.generator(0), 3);
  x.add_term(g.identity(), 6);
  CHECK(x.augmentation() == 9);
  CHECK(x.content_valuation() == std::optional<std::int64_t>(1));
  CHECK(x.involution().coeff(g.inverse(g.generator(0))) == 3);
  const auto y = x.projected(1);
  CHECK(y.level() == 1);
  CHECK(y.augmentation() == 9);
  CHECK_FALSE(GroupRingElement(g).content_valuation().has_value());
}
