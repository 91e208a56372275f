#include "iwgraph/zeta.hpp"

#include <stdexcept>

#include "iwgraph/errors.hpp"

namespace iwgraph {
namespace {

// I - A u + (D - I) u^2 over the coefficient ring R.
template <class R>
Matrix<Polynomial<R>> ihara_matrix(const Matrix<R>& a, const Matrix<R>& d) {
  const std::size_t n = a.rows();
  Matrix<Polynomial<R>> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const R one(i == j ? 1 : 0);
      m(i, j) = Polynomial<R>(std::vector<R>{one, R(0) - a(i, j), d(i, j) - one});
    }
  return m;
}

Polynomial<Integer> one_minus_u2() { return IntPolynomial(std::vector<Integer>{1, 0, -1}); }

void require_same_level(const Representation& rho, const VoltageAssignment& alpha, int level) {
  if (rho.group().level() != level || !(rho.group().spec() == alpha.group()))
    throw std::invalid_argument("representation " + rho.name() + " does not live on G^(" +
                                std::to_string(level) + ")");
}

}  // namespace

ZetaData ihara_zeta_inverse(const Multigraph& x) {
  const GraphMatrices gm = graph_matrices(x);
  return ZetaData{gm.chi, bareiss_determinant(ihara_matrix(gm.adjacency, gm.degree))};
}

IntPolynomial ihara_zeta_inverse_polynomial(const ZetaData& z) {
  IntPolynomial out = z.det_part;
  for (std::int64_t k = 0; k < -z.chi; ++k) out = out * one_minus_u2();
  for (std::int64_t k = 0; k < z.chi; ++k) out = IntPolynomial::exact_div(out, one_minus_u2());
  return out;
}

std::map<GroupElement, IntMatrix> cover_adjacency_blocks(const DerivedGraph& cover) {
  const std::size_t m = cover.base_vertex_count();
  const GroupElement one = cover.group().identity();
  std::map<GroupElement, IntMatrix> blocks;
  auto bump = [&](const GroupElement& s, std::size_t i, std::size_t j, int by) {
    auto it = blocks.find(s);
    if (it == blocks.end()) it = blocks.emplace(s, IntMatrix(m, m, Integer(0))).first;
    it->second(i, j) += by;
  };
  for (const Edge& e : cover.graph().edges()) {
    const std::size_t a = cover.base_vertex(e.u), b = cover.base_vertex(e.v);
    const GroupElement& ga = cover.label(e.u);
    const GroupElement& gb = cover.label(e.v);
    if (e.is_loop()) {
      if (ga == one) bump(one, a, a, 2);
      continue;
    }
    if (ga == one) bump(gb, a, b, 1);
    if (gb == one) bump(ga, b, a, 1);
  }
  return blocks;
}

TwistedMatrices twisted_matrices(const VoltageAssignment& alpha, int level, const Representation& rho) {
  require_same_level(rho, alpha, level);
  const DerivedGraph cover = derive(alpha, level);
  const std::size_t m = cover.base_vertex_count();
  const std::size_t d = rho.dimension();
  TwistedMatrices out{CycMatrix(m * d, m * d), CycMatrix(m * d, m * d)};
  for (const auto& [s, block] : cover_adjacency_blocks(cover)) {
    const CycMatrix image = rho.image(s);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (block(i, j) == 0) continue;
        const CyclotomicInteger c(block(i, j));
        for (std::size_t x = 0; x < d; ++x)
          for (std::size_t y = 0; y < d; ++y)
            out.a_rho(i * d + x, j * d + y) = out.a_rho(i * d + x, j * d + y) + c * image(x, y);
      }
  }
  const GraphMatrices base = graph_matrices(alpha.base());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t x = 0; x < d; ++x) out.d_rho(i * d + x, i * d + x) = CyclotomicInteger(base.degree(i, i));
  return out;
}

LFunctionData artin_l_inverse(const VoltageAssignment& alpha, int level, const Representation& rho) {
  const TwistedMatrices t = twisted_matrices(alpha, level, rho);
  return LFunctionData{static_cast<std::int64_t>(rho.dimension()) * alpha.base().euler_characteristic(),
                       bareiss_determinant(ihara_matrix(t.a_rho, t.d_rho))};
}

LFunctionData artin_l_inverse(const VoltageAssignment& alpha, int level, const Character& chi) {
  if (!alpha.group().is_abelian())
    throw PreconditionError("L-functions over a nonabelian level need a supplied representation");
  return artin_l_inverse(alpha, level, Representation::from_character(alpha.group(), chi));
}

CyclotomicInteger h_at_one(const VoltageAssignment& alpha, int level, const Representation& rho) {
  const TwistedMatrices t = twisted_matrices(alpha, level, rho);
  return bareiss_determinant(t.d_rho - t.a_rho);
}

CyclotomicInteger h_at_one(const VoltageAssignment& alpha, int level, const Character& chi) {
  if (!alpha.group().is_abelian())
    throw PreconditionError("characters are only defined for abelian towers");
  return h_at_one(alpha, level, Representation::from_character(alpha.group(), chi));
}

bool adjacency_twist_agrees(const VoltageAssignment& alpha, int level, const Representation& rho) {
  const TwistedMatrices t = twisted_matrices(alpha, level, rho);
  return rho.apply(voltage_laplacian_untransposed(alpha, level)) == t.d_rho - t.a_rho;
}

InterpolationReport interpolation_check(const VoltageAssignment& alpha, int level) {
  InterpolationReport report;
  report.level = level;
  report.all_pass = true;
  for (auto& [chi, nrd] : nrd_abelian(voltage_laplacian(alpha, level))) {
    InterpolationEntry entry{chi, h_at_one(alpha, level, chi), nrd, false};
    entry.equal = entry.h_value == entry.nrd_value;
    report.all_pass = report.all_pass && entry.equal;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

FactorizationReport factorization_check(const VoltageAssignment& alpha, int level, std::size_t vertex_bound) {
  if (!alpha.group().is_abelian()) throw PreconditionError("factorization check needs an abelian tower");
  FactorizationReport report;
  report.level = level;
  const DerivedGraph cover = derive(alpha, level, vertex_bound);
  report.derived = ihara_zeta_inverse(cover.graph());
  report.product = CycPolynomial(CyclotomicInteger(1));
  for (const auto& chi : enumerate_characters(alpha.group(), level)) {
    const LFunctionData l = artin_l_inverse(alpha, level, chi);
    report.product = report.product * l.det_part;
    report.exponent_sum += l.euler_exponent;
  }
  std::vector<CyclotomicInteger> lifted;
  for (const auto& c : report.derived.det_part.coeffs()) lifted.emplace_back(c);
  report.polynomials_equal = report.product == CycPolynomial(std::move(lifted));
  report.exponents_equal = report.exponent_sum == report.derived.chi;
  return report;
}

}  // namespace iwgraph
