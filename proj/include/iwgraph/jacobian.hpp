#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "iwgraph/graph.hpp"
#include "iwgraph/integer.hpp"
#include "iwgraph/matrix.hpp"
#include "iwgraph/voltage.hpp"

namespace iwgraph {

struct SmithNormalForm {
  /// Diagonal entries d_1 | d_2 | ... (nonnegative), min(rows, cols) of them;
  /// zeros trail.
  std::vector<Integer> diagonal;
  std::size_t rank = 0;
};

/// Exact Smith normal form. Pivots on the entry of smallest nonzero absolute
/// value, ties broken by row-major position.
SmithNormalForm smith_normal_form(IntMatrix m);

/// Finitely generated abelian group Z^free_rank + (+)_i Z/torsion_i, with the
/// torsion invariant factors (all > 1) in a divisibility chain.
struct AbelianGroupStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  /// Order of the torsion part.
  Integer torsion_order() const;
  std::string to_string() const;
  friend bool operator==(const AbelianGroupStructure&, const AbelianGroupStructure&) = default;
};

/// Cokernel of an integer matrix read off its Smith form.
AbelianGroupStructure cokernel_structure(const IntMatrix& m);

/// J(X): cokernel of the reduced Laplacian (first vertex deleted). Throws
/// PreconditionError for disconnected X.
AbelianGroupStructure jacobian_structure(const Multigraph& x);

/// Pic(X): cokernel of the full Laplacian D - A^t. Throws PreconditionError
/// for disconnected X.
AbelianGroupStructure picard_structure(const Multigraph& x);

struct LevelJacobian {
  int level = 0;
  AbelianGroupStructure jacobian;
  std::int64_t e = 0;  // v_p(|J(X_n)|)
};

/// Jacobian of X_n and the p-adic valuation of its order. Throws
/// PreconditionError if X_n is disconnected.
LevelJacobian level_jacobian(const VoltageAssignment& alpha, int level,
                             std::size_t vertex_bound = kDefaultDeriveBound);

}  // namespace iwgraph
