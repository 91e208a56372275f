#include "iwgraph/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "iwgraph/errors.hpp"
#include "iwgraph/integer.hpp"

namespace iwgraph {

TowerGroupSpec TowerGroupSpec::abelian(std::int64_t p, int rank) {
  TowerGroupSpec s;
  s.p = p;
  s.kind = GroupKind::abelian;
  s.rank = rank;
  return s;
}

TowerGroupSpec TowerGroupSpec::metacyclic(std::int64_t p, std::int64_t action_unit) {
  TowerGroupSpec s;
  s.p = p;
  s.kind = GroupKind::metacyclic;
  s.rank = 2;
  s.action_unit = action_unit;
  return s;
}

void TowerGroupSpec::validate() const {
  if (!is_prime(p)) throw ConfigError("p must be prime");
  if (kind == GroupKind::abelian && rank < 0) throw ConfigError("abelian rank must be nonnegative");
  if (kind == GroupKind::metacyclic) {
    const std::int64_t u = unit();
    if (((u - 1) % p + p) % p != 0) throw ConfigError("action unit must be congruent to 1 mod p");
  }
}

std::string TowerGroupSpec::describe() const {
  std::ostringstream out;
  if (kind == GroupKind::abelian) out << "abelian(p=" << p << ",rank=" << rank << ")";
  else out << "metacyclic(p=" << p << ",u=" << unit() << ")";
  return out.str();
}

Word inverse_word(const Word& w) {
  Word inv(w.rbegin(), w.rend());
  for (auto& [g, e] : inv) e = -e;
  return inv;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << "*";
    out << "g" << w[i].first;
    if (w[i].second != 1) out << "^" << w[i].second;
  }
  return out.str();
}

FiniteGroup::FiniteGroup(TowerGroupSpec spec, int level) : spec_(spec), level_(level) {
  if (level < 0) throw std::invalid_argument("group level must be nonnegative");
  spec_.validate();
  modulus_ = ipow64(spec_.p, level);
  unit_mod_ = modulus_ == 1 ? 0 : ((spec_.unit() % modulus_) + modulus_) % modulus_;
}

std::size_t FiniteGroup::order() const {
  std::size_t n = 1;
  for (int i = 0; i < spec_.generator_count(); ++i) n *= static_cast<std::size_t>(modulus_);
  return n;
}

std::int64_t FiniteGroup::reduce(std::int64_t a) const {
  std::int64_t r = a % modulus_;
  return r < 0 ? r + modulus_ : r;
}

std::int64_t FiniteGroup::unit_power(std::int64_t e) const {
  if (modulus_ == 1) return 0;
  std::int64_t result = 1 % modulus_, base = unit_mod_;
  while (e > 0) {
    if (e & 1) result = static_cast<std::int64_t>((__int128)result * base % modulus_);
    base = static_cast<std::int64_t>((__int128)base * base % modulus_);
    e >>= 1;
  }
  return result;
}

GroupElement FiniteGroup::identity() const {
  return GroupElement{level_, std::vector<std::int64_t>(static_cast<std::size_t>(spec_.generator_count()), 0)};
}

GroupElement FiniteGroup::generator(int index) const {
  if (index < 0 || index >= spec_.generator_count())
    throw ConfigError("unknown generator " + std::to_string(index));
  GroupElement g = identity();
  g.coords[static_cast<std::size_t>(index)] = reduce(1);
  return g;
}

bool FiniteGroup::contains(const GroupElement& g) const {
  if (g.level != level_ || g.coords.size() != static_cast<std::size_t>(spec_.generator_count())) return false;
  return std::all_of(g.coords.begin(), g.coords.end(),
                     [&](std::int64_t c) { return c >= 0 && c < modulus_; });
}

GroupElement FiniteGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  if (!contains(a) || !contains(b)) throw std::invalid_argument("group element from a different level");
  GroupElement r = identity();
  if (spec_.kind == GroupKind::abelian) {
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = reduce(a.coords[i] + b.coords[i]);
  } else {
    // (s^a t^b)(s^c t^d) = s^{a + u^b c} t^{b + d}
    const auto twisted = static_cast<std::int64_t>((__int128)unit_power(a.coords[1]) * b.coords[0] % modulus_);
    r.coords[0] = reduce(a.coords[0] + twisted);
    r.coords[1] = reduce(a.coords[1] + b.coords[1]);
  }
  return r;
}

GroupElement FiniteGroup::inverse(const GroupElement& a) const {
  if (!contains(a)) throw std::invalid_argument("group element from a different level");
  GroupElement r = identity();
  if (spec_.kind == GroupKind::abelian) {
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = reduce(-a.coords[i]);
  } else {
    // (s^i t^j)^-1 = t^-j s^-i = s^{-i u^-j} t^-j, and u^{p^n} = 1 mod p^n.
    const std::int64_t j = reduce(-a.coords[1]);
    const auto twisted = static_cast<std::int64_t>((__int128)unit_power(j) * a.coords[0] % modulus_);
    r.coords[0] = reduce(-twisted);
    r.coords[1] = j;
  }
  return r;
}

GroupElement FiniteGroup::power(const GroupElement& a, std::int64_t e) const {
  GroupElement base = e < 0 ? inverse(a) : a;
  std::int64_t n = e < 0 ? -e : e;
  if (modulus_ > 1) n %= modulus_ * modulus_;  // exponent of G^(n) divides p^{2n}
  GroupElement result = identity();
  while (n > 0) {
    if (n & 1) result = multiply(result, base);
    base = multiply(base, base);
    n >>= 1;
  }
  return result;
}

GroupElement FiniteGroup::evaluate(const Word& w) const {
  GroupElement g = identity();
  for (const auto& [gen, e] : w) g = multiply(g, power(generator(gen), e));
  return g;
}

std::vector<GroupElement> FiniteGroup::elements(std::size_t bound) const {
  const std::size_t n = order();
  if (n > bound)
    throw ResourceError("group of order " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  std::vector<GroupElement> out;
  out.reserve(n);
  GroupElement g = identity();
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(g);
    // odometer with the last coordinate fastest, giving lexicographic order
    for (std::size_t i = g.coords.size(); i-- > 0;) {
      if (++g.coords[i] < modulus_) break;
      g.coords[i] = 0;
    }
  }
  return out;
}

std::size_t FiniteGroup::index_of(const GroupElement& g) const {
  if (!contains(g)) throw std::invalid_argument("group element from a different level");
  std::size_t idx = 0;
  for (std::int64_t c : g.coords) idx = idx * static_cast<std::size_t>(modulus_) + static_cast<std::size_t>(c);
  return idx;
}

std::vector<GroupElement> FiniteGroup::closure(const std::vector<GroupElement>& gens) const {
  std::set<GroupElement> seen{identity()};
  std::vector<GroupElement> frontier{identity()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        GroupElement y = multiply(x, s);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::string FiniteGroup::format(const GroupElement& g) const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < g.coords.size(); ++i) out << (i ? "," : "") << g.coords[i];
  out << ")";
  return out.str();
}

GroupElement word_evaluate(const TowerGroupSpec& spec, int level, const Word& w) {
  return FiniteGroup(spec, level).evaluate(w);
}

std::vector<GroupElement> enumerate_group(const TowerGroupSpec& spec, int level, std::size_t bound) {
  return FiniteGroup(spec, level).elements(bound);
}

GroupElement project(const TowerGroupSpec& spec, const GroupElement& g, int m) {
  if (m > g.level) throw std::invalid_argument("cannot project to a higher level");
  if (m < 0) throw std::invalid_argument("group level must be nonnegative");
  const std::int64_t q = ipow64(spec.p, m);
  GroupElement r = g;
  r.level = m;
  for (auto& c : r.coords) c %= q;
  return r;
}

bool is_generating_set(const TowerGroupSpec& spec, const std::vector<GroupElement>& elements) {
  FiniteGroup g1(spec, 1);
  for (const auto& e : elements)
    if (e.level != 1) throw std::invalid_argument("is_generating_set expects level-1 elements");
  return g1.closure(elements).size() == g1.order();
}

}  // namespace iwgraph
