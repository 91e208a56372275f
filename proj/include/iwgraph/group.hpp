#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace iwgraph {

enum class GroupKind { abelian, metacyclic };

/// A tower of finite p-group quotients G^(n) = G / G^{p^n} of a uniform group.
///
/// abelian:    G^(n) = (Z/p^n)^rank, generators are the coordinate vectors.
/// metacyclic: G^(n) = Z/p^n x| Z/p^n = <sigma> x| <tau>, with
///             tau sigma tau^-1 = sigma^u. Generator 0 is sigma, 1 is tau.
///             u must be congruent to 1 mod p so that the quotients form a
///             compatible tower.
struct TowerGroupSpec {
  std::int64_t p = 2;
  GroupKind kind = GroupKind::abelian;
  int rank = 1;                 // abelian rank; ignored for metacyclic
  std::int64_t action_unit = 0;  // metacyclic u; 0 means the default 1 + p

  static TowerGroupSpec abelian(std::int64_t p, int rank);
  static TowerGroupSpec metacyclic(std::int64_t p, std::int64_t action_unit = 0);

  /// Throws ConfigError when p is not prime or u is not 1 mod p.
  void validate() const;

  std::int64_t unit() const { return action_unit == 0 ? 1 + p : action_unit; }
  int generator_count() const { return kind == GroupKind::abelian ? rank : 2; }
  /// Dimension of the uniform group (the exponent l in |G^(n)| = p^{nl}).
  int dimension() const { return generator_count(); }
  bool is_abelian() const { return kind == GroupKind::abelian; }

  std::string describe() const;
  friend bool operator==(const TowerGroupSpec&, const TowerGroupSpec&) = default;
};

/// Element of some G^(n) in normal form: an exponent vector (abelian) or the
/// pair (i, j) meaning sigma^i tau^j (metacyclic). Coordinates lie in
/// [0, p^n).
struct GroupElement {
  int level = 0;
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// A word in the tower generators: (generator index, exponent) pairs,
/// evaluated left to right.
using Word = std::vector<std::pair<int, std::int64_t>>;

Word inverse_word(const Word& w);
std::string word_to_string(const Word& w);

inline constexpr std::size_t kDefaultGroupBound = 729;  // 3^6

/// The finite quotient G^(n) of a tower, with its arithmetic.
class FiniteGroup {
 public:
  FiniteGroup(TowerGroupSpec spec, int level);

  const TowerGroupSpec& spec() const { return spec_; }
  int level() const { return level_; }
  std::int64_t modulus() const { return modulus_; }  // p^n
  std::size_t order() const;

  GroupElement identity() const;
  GroupElement generator(int index) const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, std::int64_t e) const;
  GroupElement evaluate(const Word& w) const;
  bool contains(const GroupElement& g) const;

  /// All elements in lexicographic order of their coordinates; identity first.
  std::vector<GroupElement> elements(std::size_t bound = kDefaultGroupBound) const;
  /// Position of g in elements().
  std::size_t index_of(const GroupElement& g) const;

  /// Subgroup generated by the given elements, as a sorted list.
  std::vector<GroupElement> closure(const std::vector<GroupElement>& gens) const;

  std::string format(const GroupElement& g) const;

 private:
  TowerGroupSpec spec_;
  int level_;
  std::int64_t modulus_;
  std::int64_t unit_mod_;  // u mod p^n

  std::int64_t reduce(std::int64_t a) const;
  std::int64_t unit_power(std::int64_t e) const;  // u^e mod p^n, e >= 0
};

/// Evaluates a word in G^(n); throws ConfigError on an invalid generator index.
GroupElement word_evaluate(const TowerGroupSpec& spec, int level, const Word& w);

/// All elements of G^(n); throws ResourceError if |G^(n)| exceeds `bound`.
std::vector<GroupElement> enumerate_group(const TowerGroupSpec& spec, int level,
                                          std::size_t bound = kDefaultGroupBound);

/// Natural projection G^(n) -> G^(m) (coordinates reduced mod p^m); throws
/// std::invalid_argument if m > n.
GroupElement project(const TowerGroupSpec& spec, const GroupElement& g, int m);

/// True iff the level-1 elements generate G^(1) = G / G^p. For a uniform
/// group G^p is the Frattini subgroup, so this is equivalent to topological
/// generation of G itself.
bool is_generating_set(const TowerGroupSpec& spec, const std::vector<GroupElement>& elements);

}  // namespace iwgraph
