#include "iwgraph/jacobian.hpp"

#include <sstream>

#include "iwgraph/errors.hpp"

namespace iwgraph {
namespace {

// Truncating quotient; remainders keep the sign of the dividend and are
// strictly smaller than the pivot in absolute value.
Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithNormalForm smith_normal_form(IntMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t n = std::min(rows, cols);
  SmithNormalForm snf;
  snf.diagonal.assign(n, Integer(0));
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the trailing block
      std::size_t pr = rows, pc = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const Integer& v = a(i, j);
          if (v == 0) continue;
          if (pr == rows || mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) < 0) {
            best = v;
            pr = i;
            pc = j;
          }
        }
      if (pr == rows) {  // trailing block is zero
        snf.rank = t;
        return snf;
      }
      a.swap_rows(t, pr);
      a.swap_cols(t, pc);
      const Integer pivot = a(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = tdiv(a(i, t), pivot);
        for (std::size_t j = t; j < cols; ++j)
          if (a(t, j) != 0) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = tdiv(a(t, j), pivot);
        for (std::size_t i = t; i < rows; ++i)
          if (a(i, t) != 0) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block; otherwise fold an
      // offending row into row t and reduce again.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), pivot.get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) a(t, k) += a(i, k);
            divides = false;
            break;
          }
      if (!divides) continue;
      snf.diagonal[t] = abs(pivot);
      break;
    }
  }
  snf.rank = n;
  return snf;
}

Integer AbelianGroupStructure::torsion_order() const {
  Integer order = 1;
  for (const auto& d : torsion) order *= d;
  return order;
}

std::string AbelianGroupStructure::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  for (std::size_t i = 0; i < torsion.size();) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    out << (first ? "" : " + ");
    if (j - i == 1) out << "Z/" << torsion[i].get_str();
    else out << "(Z/" << torsion[i].get_str() << ")^" << (j - i);
    first = false;
    i = j;
  }
  if (first) out << "0";
  return out.str();
}

AbelianGroupStructure cokernel_structure(const IntMatrix& m) {
  const SmithNormalForm snf = smith_normal_form(m);
  AbelianGroupStructure g;
  g.free_rank = m.rows() - snf.rank;
  for (const auto& d : snf.diagonal)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

AbelianGroupStructure jacobian_structure(const Multigraph& x) {
  if (!is_connected(x)) throw PreconditionError("Jacobian requires a connected graph");
  if (x.vertex_count() <= 1) return {};
  const IntMatrix l = graph_matrices(x).laplacian().transposed();
  return cokernel_structure(l.minor(0, 0));
}

AbelianGroupStructure picard_structure(const Multigraph& x) {
  if (!is_connected(x)) throw PreconditionError("Picard group requires a connected graph");
  return cokernel_structure(graph_matrices(x).laplacian().transposed());
}

LevelJacobian level_jacobian(const VoltageAssignment& alpha, int level, std::size_t vertex_bound) {
  const DerivedGraph cover = derive(alpha, level, vertex_bound);
  if (!is_connected(cover.graph()))
    throw PreconditionError("derived graph at level " + std::to_string(level) +
                            " is disconnected; the voltage assignment fails the connectivity criterion");
  LevelJacobian out;
  out.level = level;
  out.jacobian = jacobian_structure(cover.graph());
  out.e = *valuation(out.jacobian.torsion_order(), alpha.group().p);
  return out;
}

}  // namespace iwgraph
