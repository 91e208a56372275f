#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "iwgraph/cyclotomic.hpp"
#include "iwgraph/graph.hpp"
#include "iwgraph/group_ring.hpp"
#include "iwgraph/polynomial.hpp"
#include "iwgraph/voltage.hpp"

namespace iwgraph {

/// zeta_X(u)^-1 = (1 - u^2)^(-chi) * det_part(u).
struct ZetaData {
  std::int64_t chi = 0;
  IntPolynomial det_part;
};

/// det(I - A u + (D - I) u^2) by fraction-free elimination over Z[u].
ZetaData ihara_zeta_inverse(const Multigraph& x);

/// The full zeta_X(u)^-1 when chi <= 0, i.e. when the (1 - u^2) factor is a
/// polynomial. For chi > 0 the division by (1 - u^2)^chi must be exact and
/// throws std::domain_error otherwise.
IntPolynomial ihara_zeta_inverse_polynomial(const ZetaData& z);

/// L(rho, u)^-1 = (1 - u^2)^(-euler_exponent) * det_part(u), where
/// euler_exponent = dim(rho) * chi(X).
struct LFunctionData {
  std::int64_t euler_exponent = 0;
  CycPolynomial det_part;
};

/// The matrices A(s) of the cover X_n / X, one per group element s, where
/// A(s)[i][j] counts the edges from (v_i, 1) to (v_j, s). A loop at (v_i, 1)
/// counts twice towards A(1)[i][i]. Elements with A(s) = 0 are omitted.
std::map<GroupElement, IntMatrix> cover_adjacency_blocks(const DerivedGraph& cover);

/// A_rho = sum_s A(s) (x) rho(s) and D_rho = D (x) I_d.
struct TwistedMatrices {
  CycMatrix a_rho;
  CycMatrix d_rho;
};

TwistedMatrices twisted_matrices(const VoltageAssignment& alpha, int level, const Representation& rho);

/// Artin-Ihara L-function of the level-n cover at a representation of
/// G^(n). The representation must live on G^(n) itself.
LFunctionData artin_l_inverse(const VoltageAssignment& alpha, int level, const Representation& rho);
/// Character version; throws PreconditionError for nonabelian towers.
LFunctionData artin_l_inverse(const VoltageAssignment& alpha, int level, const Character& chi);

/// h(rho, 1) = det(D_rho - A_rho).
CyclotomicInteger h_at_one(const VoltageAssignment& alpha, int level, const Representation& rho);
CyclotomicInteger h_at_one(const VoltageAssignment& alpha, int level, const Character& chi);

/// rho(D - A_alpha) == D_rho - A_rho, comparing the alpha-built matrix with
/// the one read off the derived graph.
bool adjacency_twist_agrees(const VoltageAssignment& alpha, int level, const Representation& rho);

struct InterpolationEntry {
  Character chi;
  CyclotomicInteger h_value;    // h(chi, 1)
  CyclotomicInteger nrd_value;  // chi-component of Nrd(D - A_alpha^t)
  bool equal = false;
};

struct InterpolationReport {
  int level = 0;
  std::vector<InterpolationEntry> entries;
  bool all_pass = false;
};

/// Compares h(chi, 1) with det(chi(D - A_alpha^t)) for every character of an
/// abelian G^(n). Since chi(A_alpha^t) = chi(A_alpha)^t, each character is
/// matched with itself. Mismatches are reported, never thrown.
InterpolationReport interpolation_check(const VoltageAssignment& alpha, int level);

struct FactorizationReport {
  int level = 0;
  ZetaData derived;                  // zeta of X_n
  CycPolynomial product;             // product of the L-function det parts
  std::int64_t exponent_sum = 0;     // sum over characters of chi(X)
  bool polynomials_equal = false;
  bool exponents_equal = false;
  bool passed() const { return polynomials_equal && exponents_equal; }
};

/// Checks prod_chi L(chi)^-1 = zeta_{X_n}^-1 for an abelian G^(n), both for
/// the determinant parts and for the (1 - u^2) exponents.
FactorizationReport factorization_check(const VoltageAssignment& alpha, int level,
                                        std::size_t vertex_bound = kDefaultDeriveBound);

}  // namespace iwgraph
