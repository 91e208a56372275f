#include "iwgraph/iwasawa.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "iwgraph/errors.hpp"

namespace iwgraph {

TowerReport tower_en(const VoltageAssignment& alpha, int max_level, std::size_t vertex_bound) {
  if (max_level < 0) throw std::invalid_argument("max level must be nonnegative");
  if (!connectivity_criterion(alpha))
    throw PreconditionError("voltage assignment fails the connectivity criterion; the tower is not connected");
  TowerReport r;
  r.p = alpha.group().p;
  r.max_level = max_level;
  for (int n = 0; n <= max_level; ++n) {
    const LevelJacobian lj = level_jacobian(alpha, n, vertex_bound);
    r.e.push_back(lj.e);
    r.group_orders.push_back(FiniteGroup(alpha.group(), n).order());
    r.connected.push_back(true);
    r.jacobians.push_back(lj.jacobian);
  }
  return r;
}

IwasawaFit fit_iwasawa(const std::vector<std::int64_t>& e, std::int64_t p) {
  if (e.size() < 3) throw std::invalid_argument("fitting needs at least three levels");
  const int len = static_cast<int>(e.size());
  const int n0 = len - 3;
  const Integer e0 = e[n0], e1 = e[n0 + 1], e2 = e[n0 + 2];
  const Integer d0 = e1 - e0, d1 = e2 - e1;
  const Integer pn0 = ipow(p, static_cast<std::uint64_t>(n0));
  const Integer denom = pn0 * (p - 1) * (p - 1);

  IwasawaFit fit;
  const Integer num = d1 - d0;
  fit.integral = mpz_divisible_p(num.get_mpz_t(), denom.get_mpz_t()) != 0;
  mpz_fdiv_q(fit.mu.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
  fit.lambda = d0 - fit.mu * pn0 * (p - 1);
  fit.nu = e0 - fit.mu * pn0 - fit.lambda * n0;

  fit.window_start = len - std::min(4, len);
  bool exact = true;
  for (int n = fit.window_start; n < len; ++n) {
    const Integer predicted = fit.mu * ipow(p, static_cast<std::uint64_t>(n)) + fit.lambda * n + fit.nu;
    fit.residuals.push_back(Integer(e[n]) - predicted);
    exact = exact && fit.residuals.back() == 0;
  }
  fit.stable = fit.integral && exact;
  return fit;
}

std::string Lambda1Det::laurent_string() const {
  std::ostringstream out;
  bool first = true;
  const auto& c = cleared.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const std::int64_t exp = static_cast<std::int64_t>(i) - k;
    if (!first) out << (c[i] < 0 ? " - " : " + ");
    else if (c[i] < 0) out << "-";
    first = false;
    const Integer mag = abs(c[i]);
    if (exp == 0 || mag != 1) out << mag.get_str();
    if (exp != 0) {
      if (mag != 1) out << "*";
      out << "gamma";
      if (exp != 1) out << "^" << exp;
    }
  }
  return first ? "0" : out.str();
}

Lambda1Det lambda1_determinant(const VoltageAssignment& alpha_quotient) {
  const TowerGroupSpec& spec = alpha_quotient.group();
  if (!spec.is_abelian() || spec.rank != 1)
    throw PreconditionError("the Lambda_1 determinant needs voltages in the rank-1 abelian tower");
  const Multigraph& x = alpha_quotient.base();
  const std::size_t m = x.vertex_count();
  if (m == 0) throw PreconditionError("the Lambda_1 determinant of an empty graph is undefined");

  // Laurent entries of L = D - A^t as exponent -> coefficient maps.
  using Laurent = std::map<std::int64_t, Integer>;
  std::vector<Laurent> entries(m * m);
  const GraphMatrices base = graph_matrices(x);
  for (std::size_t i = 0; i < m; ++i) entries[i * m + i][0] += base.degree(i, i);
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    std::int64_t a = 0;
    for (const auto& step : alpha_quotient.voltage(e)) a += step.second;
    const std::size_t t = alpha_quotient.tail(e), h = alpha_quotient.head(e);
    // A[t][h] += gamma^a and A[h][t] += gamma^-a; L takes -A^t.
    entries[h * m + t][a] -= 1;
    entries[t * m + h][-a] -= 1;
  }

  Lambda1Det out;
  Matrix<IntPolynomial> poly(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t low = 0;
    bool any = false;
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& [exp, c] : entries[i * m + j])
        if (c != 0) {
          low = any ? std::min(low, exp) : exp;
          any = true;
        }
    const std::int64_t shift = any ? -low : 0;
    out.k += shift;
    for (std::size_t j = 0; j < m; ++j) {
      IntPolynomial f;
      for (const auto& [exp, c] : entries[i * m + j])
        if (c != 0) f = f + IntPolynomial::monomial(c, static_cast<std::size_t>(exp + shift));
      poly(i, j) = f;
    }
  }
  out.cleared = bareiss_determinant(poly);
  if (out.cleared.is_zero())
    throw PreconditionError("Lambda_1 determinant vanishes; the Z_p-cover is not connected");
  out.f = out.cleared.compose(IntPolynomial(std::vector<Integer>{1, 1}));
  return out;
}

std::pair<std::int64_t, std::int64_t> mu_lambda_from_poly(const IntPolynomial& f, std::int64_t p) {
  if (f.is_zero()) throw PreconditionError("mu and lambda are undefined for the zero series");
  std::int64_t mu = -1, lambda = 0;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const auto v = valuation(f.coeffs()[i], p);
    if (!v) continue;
    if (mu < 0 || *v < mu) {
      mu = *v;
      lambda = static_cast<std::int64_t>(i);
    }
  }
  return {mu, lambda};
}

int default_probe_level(std::int64_t p) {
  int n = 0;
  std::int64_t pn = 1;
  while (pn * p <= (std::int64_t{1} << 24)) {
    pn *= p;
    ++n;
  }
  return std::max(n, 1);
}

std::int64_t mu_lower_bound(const VoltageAssignment& alpha, int n_probe) {
  const int level = n_probe > 0 ? n_probe : default_probe_level(alpha.group().p);
  const GroupRingMatrix l = voltage_laplacian(alpha, level);
  std::optional<std::int64_t> content;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j)
      if (const auto v = l(i, j).content_valuation()) content = content ? std::min(*content, *v) : *v;
  return content.value_or(0) * static_cast<std::int64_t>(alpha.base().vertex_count());
}

std::string to_string(Verdict v) { return v == Verdict::holds ? "HOLDS" : "INCONCLUSIVE"; }

MHGVerdict mhg_check(const VoltageAssignment& alpha, const SubgroupSpec& h, int n_probe) {
  const VoltageAssignment quotient = quotient_assignment(alpha, h);
  MHGVerdict out;
  out.det = lambda1_determinant(quotient);
  std::tie(out.mu1, out.lambda1) = mu_lambda_from_poly(out.det.f, alpha.group().p);
  out.mu_lower = mu_lower_bound(alpha, n_probe);
  if (out.mu1 == 0) {
    out.verdict = Verdict::holds;
    out.justification = "mu1-zero";
  } else if (alpha.group().dimension() == 2 && out.mu_lower >= out.mu1) {
    out.verdict = Verdict::holds;
    out.justification = "bounds-pinch";
    out.mu_lambda = out.mu1;
  } else {
    out.verdict = Verdict::inconclusive;
    out.justification = alpha.group().dimension() == 2 ? "bounds-apart" : "dimension-not-2";
  }
  return out;
}

FittingGenerators fitting_generators(const VoltageAssignment& alpha, int level,
                                     const std::vector<Representation>& representations,
                                     std::size_t regular_bound) {
  FittingGenerators out;
  out.level = level;
  const GroupRingMatrix l = voltage_laplacian(alpha, level);
  if (alpha.group().is_abelian()) out.components = nrd_abelian(l);
  for (const auto& rho : representations) out.representation_components.emplace_back(rho.name(), representation_det(rho, l));
  if (FiniteGroup(alpha.group(), level).order() * l.size() <= regular_bound) out.regular_det = regular_det(l, regular_bound);
  return out;
}

}  // namespace iwgraph
