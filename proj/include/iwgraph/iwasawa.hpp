#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iwgraph/group_ring.hpp"
#include "iwgraph/jacobian.hpp"
#include "iwgraph/polynomial.hpp"
#include "iwgraph/voltage.hpp"

namespace iwgraph {

/// e_n = v_p(|J(X_n)|) for n = 0..max_level.
struct TowerReport {
  std::int64_t p = 0;
  int max_level = 0;
  std::vector<std::int64_t> e;
  std::vector<std::size_t> group_orders;
  std::vector<bool> connected;
  std::vector<AbelianGroupStructure> jacobians;
};

/// Throws PreconditionError unless the connectivity criterion holds, and
/// ResourceError when a level exceeds `vertex_bound`.
TowerReport tower_en(const VoltageAssignment& alpha, int max_level,
                     std::size_t vertex_bound = kDefaultDeriveBound);

/// Integer solution of e_n = mu p^n + lambda n + nu through the last three
/// entries of e (indexed by level, starting at 0).
struct IwasawaFit {
  Integer mu = 0, lambda = 0, nu = 0;
  bool integral = false;  // the three-level solve had an integer solution
  bool stable = false;    // the formula reproduces every level in the window
  int window_start = 0;   // first level of the stability window
  std::vector<Integer> residuals;  // e_n - formula over the window
};

/// Needs at least three entries (std::invalid_argument otherwise). The
/// window is the last min(4, len) levels.
IwasawaFit fit_iwasawa(const std::vector<std::int64_t>& e, std::int64_t p);

/// Determinant of D - A_alpha'^t over Z[gamma, gamma^-1] for a Z_p-tower.
///
/// Each row is multiplied by the power of gamma that makes its entries
/// polynomial; k records the total power, so cleared = gamma^k * det.
struct Lambda1Det {
  std::int64_t k = 0;
  IntPolynomial cleared;  // in gamma
  IntPolynomial f;        // cleared(1 + T)
  /// Coefficients of det as a Laurent polynomial, starting at gamma^(-k).
  std::vector<Integer> laurent() const { return cleared.coeffs(); }
  std::string laurent_string() const;
};

/// Throws PreconditionError if the tower is not the rank-1 abelian one or the
/// determinant vanishes (the Z_p-cover is then not a torsion Pic module).
Lambda1Det lambda1_determinant(const VoltageAssignment& alpha_quotient);

/// (mu, lambda) of a nonzero power series: least coefficient valuation and
/// the first index attaining it. Throws PreconditionError on zero.
std::pair<std::int64_t, std::int64_t> mu_lambda_from_poly(const IntPolynomial& f, std::int64_t p);

/// Level at which mu_lower_bound reads the content by default: the largest n
/// with p^n <= 2^24, where distinct voltages in practice stay distinct.
int default_probe_level(std::int64_t p);

/// k * |V(X)| where p^k divides every coefficient of every entry of
/// D - A_alpha^t at level n_probe (n_probe = 0 selects the default).
/// Coarser levels can only merge coefficients, so a higher level never gives
/// a larger bound.
std::int64_t mu_lower_bound(const VoltageAssignment& alpha, int n_probe = 0);

enum class Verdict { holds, inconclusive };
std::string to_string(Verdict v);

struct MHGVerdict {
  std::int64_t mu1 = 0;
  std::int64_t lambda1 = 0;
  std::int64_t mu_lower = 0;
  Verdict verdict = Verdict::inconclusive;
  std::string justification;  // "mu1-zero", "bounds-pinch", "bounds-apart", "dimension-not-2"
  std::optional<std::int64_t> mu_lambda;  // exact mu over Lambda, when pinched
  Lambda1Det det;
};

MHGVerdict mhg_check(const VoltageAssignment& alpha, const SubgroupSpec& h, int n_probe = 0);

/// Level-n generators of the Fitting ideal of Pic: the per-character
/// components of Nrd(D - A_alpha^t) (abelian towers only), determinants under
/// supplied representations, and the regular-representation determinant.
struct FittingGenerators {
  int level = 0;
  std::vector<std::pair<Character, CyclotomicInteger>> components;
  std::vector<std::pair<std::string, CyclotomicInteger>> representation_components;
  std::optional<Integer> regular_det;  // absent when above the size bound
};

FittingGenerators fitting_generators(const VoltageAssignment& alpha, int level,
                                     const std::vector<Representation>& representations = {},
                                     std::size_t regular_bound = kDefaultRegularBound);

}  // namespace iwgraph
