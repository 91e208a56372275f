#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iwgraph/cyclotomic.hpp"
#include "iwgraph/group.hpp"
#include "iwgraph/integer.hpp"
#include "iwgraph/matrix.hpp"

namespace iwgraph {

/// Element of the integral group ring Z[G^(n)]. Zero coefficients are pruned.
class GroupRingElement {
 public:
  explicit GroupRingElement(FiniteGroup group) : group_(std::move(group)) {}
  GroupRingElement(FiniteGroup group, const Integer& scalar);
  GroupRingElement(FiniteGroup group, const GroupElement& g, const Integer& coeff = 1);

  const FiniteGroup& group() const { return group_; }
  int level() const { return group_.level(); }
  const std::map<GroupElement, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const GroupElement& g) const;

  /// Adds c * g in place.
  void add_term(const GroupElement& g, const Integer& c);

  /// Sum of coefficients (image under g -> 1).
  Integer augmentation() const;
  /// Image under g -> g^-1.
  GroupRingElement involution() const;
  /// Image under Z[G^(n)] -> Z[G^(m)].
  GroupRingElement projected(int m) const;
  /// Minimum p-adic valuation over the nonzero coefficients; nullopt for 0.
  std::optional<std::int64_t> content_valuation() const;

  GroupRingElement operator-() const;
  friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

  std::string to_string() const;

 private:
  FiniteGroup group_;
  std::map<GroupElement, Integer> terms_;

  void require_same_group(const GroupRingElement& other) const;
};

/// Square matrix over Z[G^(n)] with a common level.
class GroupRingMatrix {
 public:
  GroupRingMatrix(FiniteGroup group, std::size_t n);

  const FiniteGroup& group() const { return group_; }
  std::size_t size() const { return n_; }
  GroupRingElement& operator()(std::size_t i, std::size_t j) { return entries_.at(i * n_ + j); }
  const GroupRingElement& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }

  GroupRingMatrix transposed() const;
  GroupRingMatrix projected(int m) const;
  /// Entrywise augmentation.
  IntMatrix augmentation() const;

  friend GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b);
  friend bool operator==(const GroupRingMatrix& a, const GroupRingMatrix& b);

 private:
  FiniteGroup group_;
  std::size_t n_;
  std::vector<GroupRingElement> entries_;
};

/// Character of an abelian G^(n): generator k maps to zeta_{p^n}^{exponents[k]}.
struct Character {
  int level = 0;
  std::vector<std::int64_t> exponents;

  friend auto operator<=>(const Character&, const Character&) = default;
  friend bool operator==(const Character&, const Character&) = default;
  bool is_trivial() const;
  std::string label() const;
};

/// All characters of an abelian G^(n), lexicographic by exponent vector.
std::vector<Character> enumerate_characters(const TowerGroupSpec& spec, int level,
                                            std::size_t bound = kDefaultGroupBound);

/// The character chi o pi of level n inflated from a level-m character.
Character inflate(const TowerGroupSpec& spec, const Character& chi, int n);

/// chi(g) as an element of Z[zeta_{p^n}].
CyclotomicInteger character_value(const TowerGroupSpec& spec, const Character& chi, const GroupElement& g);

/// Linear extension of chi to Z[G^(n)]; throws PreconditionError for
/// nonabelian towers.
CyclotomicInteger character_evaluate(const Character& chi, const GroupRingElement& x);

/// Entrywise chi-image of a group-ring matrix.
CycMatrix character_image(const Character& chi, const GroupRingMatrix& m);

/// Matrix representation of G^(n) given by generator images over Z[zeta].
/// Used for nonabelian quotients, where irreducibles are supplied by the user.
class Representation {
 public:
  /// Checks the defining relations of G^(n) on the generator images and
  /// throws ConfigError if they fail.
  Representation(FiniteGroup group, std::vector<CycMatrix> generator_images, std::string name = "rho");
  /// One-dimensional representation attached to an abelian character.
  static Representation from_character(const TowerGroupSpec& spec, const Character& chi);

  const FiniteGroup& group() const { return group_; }
  std::size_t dimension() const { return dim_; }
  const std::string& name() const { return name_; }
  CycMatrix image(const GroupElement& g) const;
  /// Block matrix rho(M) of size (m d) x (m d).
  CycMatrix apply(const GroupRingMatrix& m) const;

 private:
  FiniteGroup group_;
  std::vector<CycMatrix> gens_;
  std::size_t dim_;
  std::string name_;
};

/// Per-character components of the reduced norm of M (abelian G^(n)):
/// det(chi(M)) for every character, in enumerate_characters order.
std::vector<std::pair<Character, CyclotomicInteger>> nrd_abelian(const GroupRingMatrix& m);

/// det(rho(M)) for a supplied representation.
CyclotomicInteger representation_det(const Representation& rho, const GroupRingMatrix& m);

inline constexpr std::size_t kDefaultRegularBound = 1024;

/// Determinant of the integer matrix of x -> M x on Z[G^(n)]^m, where Z[G]
/// carries the basis G in enumeration order. Throws ResourceError when
/// m |G| exceeds `bound`.
Integer regular_det(const GroupRingMatrix& m, std::size_t bound = kDefaultRegularBound);

/// The integer matrix behind regular_det.
IntMatrix regular_matrix(const GroupRingMatrix& m, std::size_t bound = kDefaultRegularBound);

}  // namespace iwgraph
