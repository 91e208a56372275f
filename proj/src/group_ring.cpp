#include "iwgraph/group_ring.hpp"

#include <sstream>
#include <stdexcept>

#include "iwgraph/errors.hpp"

namespace iwgraph {

GroupRingElement::GroupRingElement(FiniteGroup group, const Integer& scalar) : group_(std::move(group)) {
  add_term(group_.identity(), scalar);
}

GroupRingElement::GroupRingElement(FiniteGroup group, const GroupElement& g, const Integer& coeff)
    : group_(std::move(group)) {
  if (!group_.contains(g)) throw std::invalid_argument("group element does not belong to the group ring's level");
  add_term(g, coeff);
}

Integer GroupRingElement::coeff(const GroupElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElement::add_term(const GroupElement& g, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer GroupRingElement::augmentation() const {
  Integer s = 0;
  for (const auto& [g, c] : terms_) s += c;
  return s;
}

GroupRingElement GroupRingElement::involution() const {
  GroupRingElement r(group_);
  for (const auto& [g, c] : terms_) r.add_term(group_.inverse(g), c);
  return r;
}

GroupRingElement GroupRingElement::projected(int m) const {
  FiniteGroup target(group_.spec(), m);
  GroupRingElement r(target);
  for (const auto& [g, c] : terms_) r.add_term(project(group_.spec(), g, m), c);
  return r;
}

std::optional<std::int64_t> GroupRingElement::content_valuation() const {
  std::optional<std::int64_t> best;
  for (const auto& [g, c] : terms_) {
    auto v = valuation(c, group_.spec().p);
    if (!best || *v < *best) best = v;
  }
  return best;
}

void GroupRingElement::require_same_group(const GroupRingElement& other) const {
  if (group_.level() != other.group_.level() || !(group_.spec() == other.group_.spec()))
    throw std::invalid_argument("group ring elements live at different levels");
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r = *this;
  for (auto& [g, c] : r.terms_) c = -c;
  return r;
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  a.require_same_group(b);
  GroupRingElement r = a;
  for (const auto& [g, c] : b.terms_) r.add_term(g, c);
  return r;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) { return a + (-b); }

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  a.require_same_group(b);
  GroupRingElement r(a.group_);
  for (const auto& [g, c] : a.terms_)
    for (const auto& [h, d] : b.terms_) r.add_term(a.group_.multiply(g, h), c * d);
  return r;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return a.group_.level() == b.group_.level() && a.group_.spec() == b.group_.spec() && a.terms_ == b.terms_;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const Integer mag = abs(c);
    const bool is_identity = g == group_.identity();
    if (is_identity || mag != 1) out << mag.get_str();
    if (!is_identity) out << (mag != 1 ? "*" : "") << "g" << group_.format(g);
  }
  return out.str();
}

GroupRingMatrix::GroupRingMatrix(FiniteGroup group, std::size_t n)
    : group_(group), n_(n), entries_(n * n, GroupRingElement(group)) {}

GroupRingMatrix GroupRingMatrix::transposed() const {
  GroupRingMatrix t(group_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

GroupRingMatrix GroupRingMatrix::projected(int m) const {
  GroupRingMatrix r(FiniteGroup(group_.spec(), m), n_);
  for (std::size_t i = 0; i < n_ * n_; ++i) r.entries_[i] = entries_[i].projected(m);
  return r;
}

IntMatrix GroupRingMatrix::augmentation() const {
  IntMatrix r(n_, n_, Integer(0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(i, j) = (*this)(i, j).augmentation();
  return r;
}

GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("group ring matrix product: size mismatch");
  GroupRingMatrix r(a.group_, a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j) {
      GroupRingElement acc(a.group_);
      for (std::size_t k = 0; k < a.n_; ++k) acc = acc + a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

bool operator==(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  return a.n_ == b.n_ && a.entries_ == b.entries_;
}

bool Character::is_trivial() const {
  for (auto e : exponents)
    if (e != 0) return false;
  return true;
}

std::string Character::label() const {
  std::ostringstream out;
  out << "chi[";
  for (std::size_t i = 0; i < exponents.size(); ++i) out << (i ? "," : "") << exponents[i];
  out << "]";
  return out.str();
}

namespace {

void require_abelian(const TowerGroupSpec& spec, const char* what) {
  if (!spec.is_abelian())
    throw PreconditionError(std::string(what) + " requires an abelian tower; supply representations instead");
}

}  // namespace

std::vector<Character> enumerate_characters(const TowerGroupSpec& spec, int level, std::size_t bound) {
  require_abelian(spec, "character enumeration");
  // The dual group is isomorphic to G^(n) with the same lexicographic order.
  std::vector<Character> out;
  for (auto& g : FiniteGroup(spec, level).elements(bound)) out.push_back(Character{level, g.coords});
  return out;
}

Character inflate(const TowerGroupSpec& spec, const Character& chi, int n) {
  if (n < chi.level) throw std::invalid_argument("cannot inflate a character to a lower level");
  const std::int64_t scale = ipow64(spec.p, n - chi.level);
  Character r{n, chi.exponents};
  for (auto& e : r.exponents) e *= scale;
  return r;
}

CyclotomicInteger character_value(const TowerGroupSpec& spec, const Character& chi, const GroupElement& g) {
  require_abelian(spec, "character evaluation");
  if (g.level != chi.level || g.coords.size() != chi.exponents.size())
    throw std::invalid_argument("character and group element at different levels");
  const std::int64_t n = ipow64(spec.p, chi.level);
  std::int64_t e = 0;
  for (std::size_t k = 0; k < g.coords.size(); ++k) e = (e + chi.exponents[k] % n * g.coords[k]) % n;
  return CyclotomicInteger::zeta_power(spec.p, chi.level, e);
}

CyclotomicInteger character_evaluate(const Character& chi, const GroupRingElement& x) {
  const TowerGroupSpec& spec = x.group().spec();
  require_abelian(spec, "character evaluation");
  if (x.level() != chi.level) throw std::invalid_argument("character and group ring element at different levels");
  CyclotomicInteger acc(0);
  for (const auto& [g, c] : x.terms()) acc = acc + CyclotomicInteger(c) * character_value(spec, chi, g);
  return acc;
}

CycMatrix character_image(const Character& chi, const GroupRingMatrix& m) {
  CycMatrix r(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = character_evaluate(chi, m(i, j));
  return r;
}

namespace {

CycMatrix matrix_power(const CycMatrix& a, std::int64_t e) {
  CycMatrix result = CycMatrix::identity(a.rows());
  CycMatrix base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

}  // namespace

Representation::Representation(FiniteGroup group, std::vector<CycMatrix> generator_images, std::string name)
    : group_(std::move(group)), gens_(std::move(generator_images)), name_(std::move(name)) {
  const TowerGroupSpec& spec = group_.spec();
  if (gens_.size() != static_cast<std::size_t>(spec.generator_count()))
    throw ConfigError("representation " + name_ + " needs one matrix per generator");
  dim_ = gens_.empty() ? 1 : gens_.front().rows();
  for (const auto& g : gens_)
    if (!g.square() || g.rows() != dim_) throw ConfigError("representation " + name_ + " has inconsistent matrix sizes");
  const CycMatrix id = CycMatrix::identity(dim_);
  for (const auto& g : gens_)
    if (!(matrix_power(g, group_.modulus()) == id))
      throw ConfigError("representation " + name_ + ": generator image does not have order dividing p^n");
  if (spec.is_abelian()) {
    for (std::size_t a = 0; a < gens_.size(); ++a)
      for (std::size_t b = a + 1; b < gens_.size(); ++b)
        if (!(gens_[a] * gens_[b] == gens_[b] * gens_[a]))
          throw ConfigError("representation " + name_ + ": generator images do not commute");
  } else {
    const std::int64_t u = group_.modulus() == 1 ? 1 : ((spec.unit() % group_.modulus()) + group_.modulus()) % group_.modulus();
    if (!(gens_[1] * gens_[0] == matrix_power(gens_[0], u) * gens_[1]))
      throw ConfigError("representation " + name_ + ": relation tau sigma = sigma^u tau fails");
  }
}

Representation Representation::from_character(const TowerGroupSpec& spec, const Character& chi) {
  FiniteGroup group(spec, chi.level);
  std::vector<CycMatrix> gens;
  for (int k = 0; k < spec.generator_count(); ++k) {
    CycMatrix m(1, 1);
    m(0, 0) = character_value(spec, chi, group.generator(k));
    gens.push_back(std::move(m));
  }
  return Representation(group, std::move(gens), chi.label());
}

CycMatrix Representation::image(const GroupElement& g) const {
  if (!group_.contains(g)) throw std::invalid_argument("group element not in the representation's group");
  CycMatrix r = CycMatrix::identity(dim_);
  // Normal form is the ordered product g_0^{c_0} g_1^{c_1} ... in both kinds.
  for (std::size_t k = 0; k < g.coords.size(); ++k)
    if (g.coords[k] != 0) r = r * matrix_power(gens_[k], g.coords[k]);
  return r;
}

CycMatrix Representation::apply(const GroupRingMatrix& m) const {
  const std::size_t n = m.size();
  CycMatrix out(n * dim_, n * dim_);
  std::map<GroupElement, CycMatrix> cache;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [g, c] : m(i, j).terms()) {
        auto it = cache.find(g);
        if (it == cache.end()) it = cache.emplace(g, image(g)).first;
        for (std::size_t a = 0; a < dim_; ++a)
          for (std::size_t b = 0; b < dim_; ++b)
            out(i * dim_ + a, j * dim_ + b) = out(i * dim_ + a, j * dim_ + b) + CyclotomicInteger(c) * it->second(a, b);
      }
  return out;
}

std::vector<std::pair<Character, CyclotomicInteger>> nrd_abelian(const GroupRingMatrix& m) {
  require_abelian(m.group().spec(), "nrd_abelian");
  std::vector<std::pair<Character, CyclotomicInteger>> out;
  for (const auto& chi : enumerate_characters(m.group().spec(), m.group().level()))
    out.emplace_back(chi, bareiss_determinant(character_image(chi, m)));
  return out;
}

CyclotomicInteger representation_det(const Representation& rho, const GroupRingMatrix& m) {
  if (rho.group().level() != m.group().level() || !(rho.group().spec() == m.group().spec()))
    throw std::invalid_argument("representation and matrix live over different groups");
  return bareiss_determinant(rho.apply(m));
}

IntMatrix regular_matrix(const GroupRingMatrix& m, std::size_t bound) {
  const FiniteGroup& group = m.group();
  const std::size_t order = group.order();
  const std::size_t n = m.size();
  if (order * n > bound)
    throw ResourceError("regular representation of size " + std::to_string(order * n) + " exceeds bound " +
                        std::to_string(bound));
  const auto elems = group.elements(bound);
  IntMatrix out(n * order, n * order, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [h, c] : m(i, j).terms())
        for (std::size_t col = 0; col < order; ++col) {
          const std::size_t row = group.index_of(group.multiply(h, elems[col]));
          out(i * order + row, j * order + col) += c;
        }
  return out;
}

Integer regular_det(const GroupRingMatrix& m, std::size_t bound) {
  return bareiss_determinant(regular_matrix(m, bound));
}

}  // namespace iwgraph
