#include "commands.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "iwgraph/errors.hpp"
#include "iwgraph/iwasawa.hpp"
#include "iwgraph/jacobian.hpp"
#include "iwgraph/random_instances.hpp"
#include "iwgraph/zeta.hpp"

namespace iwgraph::cli {

namespace {

int level_of(const JobConfig& cfg, const CommandOptions& opt) {
  const int n = opt.level.value_or(cfg.level.value_or(1));
  if (n < 0) throw ConfigError("level must be nonnegative");
  return n;
}

int max_level_of(const JobConfig& cfg, const CommandOptions& opt) {
  const int n = opt.max_level.value_or(cfg.max_level.value_or(3));
  if (n < 0) throw ConfigError("max-level must be nonnegative");
  return n;
}

std::string str(const Integer& x) { return x.get_str(); }
std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string cyc_list(const CycPolynomial& f) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) out << (i ? "; " : "") << f.coeffs()[i].to_string();
  out << "]";
  return out.str();
}

std::string int_list(const std::vector<Integer>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].get_str();
  out << "]";
  return out.str();
}

Json structure_json(const AbelianGroupStructure& a) {
  Json inv = Json::array();
  for (const auto& t : a.torsion) inv.push_back(integer_to_json(t));
  return Json{{"free_rank", a.free_rank}, {"invariants", inv}, {"order", integer_to_json(a.torsion_order())}};
}

Json character_json(const Character& chi) { return Json{{"level", chi.level}, {"exponents", chi.exponents}}; }

std::vector<Representation> representations_at(const JobConfig& cfg, int level) {
  std::vector<Representation> out;
  for (const auto& rc : cfg.representations)
    if (rc.level == level) out.push_back(rc.build(cfg.alpha.group()));
  return out;
}

Report derive_cmd(const JobConfig& cfg, const CommandOptions& opt) {
  const int n = level_of(cfg, opt);
  const DerivedGraph d = derive(cfg.alpha, n);
  const Multigraph& x = d.graph();
  const Multigraph& base = cfg.alpha.base();
  Report r;
  r.parameters["level"] = n;
  Table vt{"vertices", {"index", "id", "base", "label"}, {}};
  Json vertices = Json::array();
  for (std::size_t i = 0; i < x.vertex_count(); ++i) {
    const std::string label = d.group().format(d.label(i));
    vertices.push_back(Json{{"id", x.vertices()[i]}, {"base", base.vertices()[d.base_vertex(i)]}, {"label", label}});
    vt.rows.push_back({std::to_string(i), x.vertices()[i], base.vertices()[d.base_vertex(i)], label});
  }
  Table et{"edges", {"index", "id", "tail", "head", "base"}, {}};
  Json edges = Json::array();
  for (std::size_t i = 0; i < x.edge_count(); ++i) {
    const Edge& e = x.edge(i);
    const std::string& be = base.edge(d.edge_projection()[i]).id;
    edges.push_back(Json{{"id", e.id}, {"ends", {x.vertices()[e.u], x.vertices()[e.v]}}, {"base", be}});
    et.rows.push_back({std::to_string(i), e.id, x.vertices()[e.u], x.vertices()[e.v], be});
  }
  const bool connected = is_connected(x);
  r.result = Json{{"level", n},
                  {"group_order", d.elements().size()},
                  {"vertex_count", x.vertex_count()},
                  {"edge_count", x.edge_count()},
                  {"connected", connected},
                  {"criterion_holds", connectivity_criterion(cfg.alpha)},
                  {"vertices", vertices},
                  {"edges", edges}};
  r.tables.push_back(Table{"summary",
                           {"level", "group_order", "vertices", "edges", "connected"},
                           {{std::to_string(n), std::to_string(d.elements().size()), std::to_string(x.vertex_count()),
                             std::to_string(x.edge_count()), yes_no(connected)}}});
  r.tables.push_back(std::move(vt));
  r.tables.push_back(std::move(et));
  return r;
}

Report jacobian_cmd(const JobConfig& cfg, const CommandOptions& opt) {
  const int n = level_of(cfg, opt);
  const LevelJacobian lj = level_jacobian(cfg.alpha, n);
  Report r;
  r.parameters["level"] = n;
  r.result = structure_json(lj.jacobian);
  r.result["level"] = n;
  r.result["e"] = lj.e;
  r.tables.push_back(Table{"jacobian",
                           {"level", "structure", "order", "e"},
                           {{std::to_string(n), lj.jacobian.to_string(), str(lj.jacobian.torsion_order()),
                             std::to_string(lj.e)}}});
  return r;
}

Report zeta_cmd(const JobConfig& cfg, const CommandOptions& opt) {
  const int n = level_of(cfg, opt);
  const DerivedGraph d = derive(cfg.alpha, n);
  const ZetaData z = ihara_zeta_inverse(d.graph());
  Report r;
  r.parameters["level"] = n;
  r.result = Json{{"level", n}, {"chi", z.chi}, {"det_part", polynomial_to_json(z.det_part)}};
  std::string full = "-";
  try {
    const IntPolynomial f = ihara_zeta_inverse_polynomial(z);
    r.result["zeta_inverse"] = polynomial_to_json(f);
    full = to_string(f, "u");
  } catch (const std::domain_error&) {
    r.result["zeta_inverse"] = nullptr;  // (1 - u^2)^chi does not divide the determinant
  }
  r.tables.push_back(Table{"ihara zeta",
                           {"level", "chi", "det(I - Au + (D - I)u^2)", "zeta^-1"},
                           {{std::to_string(n), std::to_string(z.chi), to_string(z.det_part, "u"), full}}});
  return r;
}

Report lfun_cmd(const JobConfig& cfg, const CommandOptions& opt) {
  const int n = level_of(cfg, opt);
  const auto reps = representations_at(cfg, n);
  const auto& spec = cfg.alpha.group();
  if (!spec.is_abelian() && reps.empty())
    throw PreconditionError("lfun on a nonabelian tower needs representations at level " + std::to_string(n) +
                            " in the config");
  Report r;
  r.parameters["level"] = n;
  Table t{"artin-ihara L-functions", {"representation", "dim", "euler_exponent", "det_part"}, {}};
  Json items = Json::array();
  if (spec.is_abelian()) {
    for (const auto& chi : enumerate_characters(spec, n)) {
      const LFunctionData l = artin_l_inverse(cfg.alpha, n, chi);
      items.push_back(Json{{"representation", chi.label()},
                           {"character", character_json(chi)},
                           {"dimension", 1},
                           {"euler_exponent", l.euler_exponent},
                           {"det_part", polynomial_to_json(l.det_part)}});
      t.rows.push_back({chi.label(), "1", std::to_string(l.euler_exponent), cyc_list(l.det_part)});
    }
  }
  for (const auto& rho : reps) {
    const LFunctionData l = artin_l_inverse(cfg.alpha, n, rho);
    items.push_back(Json{{"representation", rho.name()},
                         {"dimension", rho.dimension()},
                         {"euler_exponent", l.euler_exponent},
                         {"det_part", polynomial_to_json(l.det_part)}});
    t.rows.push_back({rho.name(), std::to_string(rho.dimension()), std::to_string(l.euler_exponent), cyc_list(l.det_part)});
  }
  r.result = Json{{"level", n}, {"l_functions", items}};
  r.tables.push_back(std::move(t));
  return r;
}

Report interpolation_cmd(const JobConfig& cfg, const CommandOptions& opt) {
  const int n = level_of(cfg, opt);
  const InterpolationReport rep = interpolation_check(cfg.alpha, n);
  Report r;
  r.parameters["level"] = n;
  Table t{"interpolation", {"character", "h(chi,1)", "nrd component", "equal"}, {}};
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    entries.push_back(Json{{"character", character_json(e.chi)},
                           {"h_value", cyclotomic_to_json(e.h_value)},
                           {"nrd_value", cyclotomic_to_json(e.nrd_value)},
                           {"equal", e.equal}});
    t.rows.push_back({e.chi.label(), e.h_value.to_string(), e.nrd_value.to_string(), e.equal ? "pass" : "FAIL"});
  }
  r.result = Json{{"level", n}, {"all_pass", rep.all_pass}, {"entries", entries}};
  r.tables.push_back(std::move(t));
  return r;
}

Report factorization_cmd(const JobConfig& cfg, const CommandOptions& opt) {
  const int n = level_of(cfg, opt);
  const FactorizationReport rep = factorization_check(cfg.alpha, n);
  Report r;
  r.parameters["level"] = n;
  r.result = Json{{"level", n},
                  {"passed", rep.passed()},
                  {"derived_chi", rep.derived.chi},
                  {"exponent_sum", rep.exponent_sum},
                  {"derived_det_part", polynomial_to_json(rep.derived.det_part)},
                  {"product_det_part", polynomial_to_json(rep.product)},
                  {"polynomials_equal", rep.polynomials_equal},
                  {"exponents_equal", rep.exponents_equal}};
  r.tables.push_back(Table{"factorization",
                           {"level", "chi(X_n)", "sum of exponents", "det part of X_n", "polynomials", "exponents"},
                           {{std::to_string(n), std::to_string(rep.derived.chi), std::to_string(rep.exponent_sum),
                             to_string(rep.derived.det_part, "u"), rep.polynomials_equal ? "pass" : "FAIL",
                             rep.exponents_equal ? "pass" : "FAIL"}}});
  return r;
}

Json tower_json(const TowerReport& t, Table& table) {
  Json levels = Json::array();
  for (std::size_t n = 0; n < t.e.size(); ++n) {
    levels.push_back(Json{{"level", n},
                          {"group_order", t.group_orders[n]},
                          {"connected", static_cast<bool>(t.connected[n])},
                          {"jacobian", structure_json(t.jacobians[n])},
                          {"e", t.e[n]}});
    table.rows.push_back({std::to_string(n), std::to_string(t.group_orders[n]), yes_no(t.connected[n]),
                          t.jacobians[n].to_string(), std::to_string(t.e[n])});
  }
  return Json{{"p", t.p}, {"max_level", t.max_level}, {"e", t.e}, {"levels", levels}};
}

Table tower_table() { return Table{"tower", {"n", "|G^(n)|", "connected", "J(X_n)", "e_n"}, {}}; }

Report tower_cmd(const JobConfig& cfg, const CommandOptions& opt) {
  const int m = max_level_of(cfg, opt);
  Report r;
  r.parameters["max_level"] = m;
  Table t = tower_table();
  r.result = tower_json(tower_en(cfg.alpha, m), t);
  r.tables.push_back(std::move(t));
  return r;
}

Report iwasawa_fit_cmd(const JobConfig& cfg, const CommandOptions& opt) {
  const int m = max_level_of(cfg, opt);
  if (m < 2) throw PreconditionError("iwasawa-fit needs max-level >= 2 (three levels)");
  const bool rank_one = cfg.alpha.group().dimension() == 1;
  const bool use_quotient = !rank_one && cfg.subgroup.has_value();
  const VoltageAssignment alpha = use_quotient ? quotient_assignment(cfg.alpha, *cfg.subgroup) : cfg.alpha;
  Report r;
  r.parameters["max_level"] = m;
  Table t = tower_table();
  const TowerReport tower = tower_en(alpha, m);
  r.result = Json{{"tower", use_quotient ? "quotient" : "full"}, {"levels", tower_json(tower, t)}};
  if (rank_one || use_quotient) {
    const IwasawaFit fit = fit_iwasawa(tower.e, tower.p);
    Json residuals = Json::array();
    for (const auto& x : fit.residuals) residuals.push_back(integer_to_json(x));
    r.result["fit"] = Json{{"mu", integer_to_json(fit.mu)},
                           {"lambda", integer_to_json(fit.lambda)},
                           {"nu", integer_to_json(fit.nu)},
                           {"integral", fit.integral},
                           {"stable", fit.stable},
                           {"window_start", fit.window_start},
                           {"residuals", residuals}};
    r.tables.push_back(Table{"fit",
                             {"mu", "lambda", "nu", "integral", "stable", "window", "residuals"},
                             {{str(fit.mu), str(fit.lambda), str(fit.nu), yes_no(fit.integral), yes_no(fit.stable),
                               std::to_string(fit.window_start) + ".." + std::to_string(m), int_list(fit.residuals)}}});
  } else {
    // growth shapes are only fitted for Z_p-towers; e_n is still reported
    r.result["fit"] = nullptr;
  }
  r.tables.insert(r.tables.begin(), std::move(t));
  return r;
}

Report fitting_cmd(const JobConfig& cfg, const CommandOptions& opt) {
  const int n = level_of(cfg, opt);
  const FittingGenerators f = fitting_generators(cfg.alpha, n, representations_at(cfg, n));
  Report r;
  r.parameters["level"] = n;
  Table t{"fitting ideal generators", {"component", "generator"}, {}};
  Json comps = Json::array();
  for (const auto& [chi, v] : f.components) {
    comps.push_back(Json{{"character", character_json(chi)}, {"value", cyclotomic_to_json(v)}});
    t.rows.push_back({chi.label(), v.to_string()});
  }
  Json reps = Json::array();
  for (const auto& [name, v] : f.representation_components) {
    reps.push_back(Json{{"representation", name}, {"value", cyclotomic_to_json(v)}});
    t.rows.push_back({name, v.to_string()});
  }
  r.result = Json{{"level", n}, {"characters", comps}, {"representations", reps}};
  if (f.regular_det) {
    r.result["regular_det"] = integer_to_json(*f.regular_det);
    t.rows.push_back({"regular", str(*f.regular_det)});
  } else {
    r.result["regular_det"] = nullptr;
    t.rows.push_back({"regular", "- (above size bound)"});
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report mhg_cmd(const JobConfig& cfg, const CommandOptions& opt) {
  SubgroupSpec h;
  if (cfg.subgroup) {
    h = *cfg.subgroup;
  } else if (cfg.alpha.group().is_abelian() && cfg.alpha.group().rank == 1) {
    h.quotient_generator = 0;
  } else if (!cfg.alpha.group().is_abelian()) {
    h.quotient_generator = 1;
  } else {
    throw ConfigError("mhg-check needs a \"subgroup\" entry for an abelian tower of rank above 1");
  }
  const int probe = opt.probe_level.value_or(0);
  const MHGVerdict v = mhg_check(cfg.alpha, h, probe);
  Report r;
  r.parameters["quotient_generator"] = h.quotient_generator;
  r.parameters["probe_level"] = probe == 0 ? default_probe_level(cfg.alpha.group().p) : probe;
  r.result = Json{{"determinant", Json{{"shift", v.det.k},
                                       {"cleared", polynomial_to_json(v.det.cleared)},
                                       {"laurent", v.det.laurent_string()}}},
                  {"f", polynomial_to_json(v.det.f)},
                  {"mu1", v.mu1},
                  {"lambda1", v.lambda1},
                  {"mu_lower", v.mu_lower},
                  {"verdict", to_string(v.verdict)},
                  {"justification", v.justification}};
  r.result["mu_lambda"] = v.mu_lambda ? Json(*v.mu_lambda) : Json(nullptr);
  r.tables.push_back(Table{"mhg",
                           {"det (gamma)", "f(T)", "mu1", "lambda1", "mu lower bound", "verdict", "justification",
                            "mu_Lambda"},
                           {{"gamma^-" + std::to_string(v.det.k) + " * (" + to_string(v.det.cleared, "gamma") + ")",
                             to_string(v.det.f, "T"), std::to_string(v.mu1), std::to_string(v.lambda1),
                             std::to_string(v.mu_lower), to_string(v.verdict), v.justification,
                             v.mu_lambda ? std::to_string(*v.mu_lambda) : "-"}}});
  return r;
}

using Handler = std::function<Report(const JobConfig&, const CommandOptions&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"derive", derive_cmd},
      {"jacobian", jacobian_cmd},
      {"zeta", zeta_cmd},
      {"lfun", lfun_cmd},
      {"check-interpolation", interpolation_cmd},
      {"check-factorization", factorization_cmd},
      {"tower", tower_cmd},
      {"iwasawa-fit", iwasawa_fit_cmd},
      {"fitting", fitting_cmd},
      {"mhg-check", mhg_cmd},
  };
  return h;
}

int default_count(const std::string& name) { return name == "check-interpolation" ? 50 : 20; }

}  // namespace

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names{"derive",     "jacobian",           "zeta",        "lfun",
                                              "check-interpolation", "check-factorization", "tower",
                                              "iwasawa-fit", "fitting",           "mhg-check"};
  return names;
}

Report run_command(const std::string& name, const JobConfig& cfg, const CommandOptions& opt) {
  const auto it = handlers().find(name);
  if (it == handlers().end()) throw ConfigError("unknown subcommand " + name);
  Report r = it->second(cfg, opt);
  r.command = name;
  return r;
}

Provenance random_suite_provenance(const std::string& name, std::uint64_t seed, const CommandOptions& opt) {
  const int count = opt.count.value_or(default_count(name));
  const std::string key = "random-suite;command=" + name + ";seed=" + std::to_string(seed) +
                          ";count=" + std::to_string(count);
  return Provenance{"random-suite", sha256_hex(key)};
}

Report run_random_suite(const std::string& name, std::uint64_t seed, const CommandOptions& opt) {
  const bool interp = name == "check-interpolation";
  if (!interp && name != "check-factorization")
    throw ConfigError(name + " needs --config; only the identity checks run a randomized suite");
  const int count = opt.count.value_or(default_count(name));
  if (count < 1) throw ConfigError("count must be positive");
  std::mt19937_64 rng(seed);
  RandomInstanceLimits limits;
  if (!interp) limits.max_cover_vertices = 40;
  Report r;
  r.command = name;
  r.parameters["seed"] = seed;
  r.parameters["count"] = count;
  Table t{"randomized " + name, {"instance", "group", "|V|", "|E|", "level", "detail", "result"}, {}};
  Json instances = Json::array();
  bool all = true;
  for (int i = 0; i < count; ++i) {
    const RandomInstance inst = random_abelian_instance(rng, limits);
    const auto& a = inst.alpha;
    bool ok = false;
    std::string detail;
    if (interp) {
      const auto rep = interpolation_check(a, inst.level);
      ok = rep.all_pass;
      detail = std::to_string(rep.entries.size()) + " characters";
    } else {
      const auto rep = factorization_check(a, inst.level);
      ok = rep.passed();
      detail = "chi(X_n) = " + std::to_string(rep.derived.chi);
    }
    all = all && ok;
    Json voltages = Json::array();
    for (const auto& w : a.voltages()) voltages.push_back(word_to_string(w));
    instances.push_back(Json{{"group", a.group().describe()},
                             {"vertices", a.base().vertex_count()},
                             {"edges", a.base().edge_count()},
                             {"level", inst.level},
                             {"voltages", voltages},
                             {"passed", ok}});
    t.rows.push_back({std::to_string(i), a.group().describe(), std::to_string(a.base().vertex_count()),
                      std::to_string(a.base().edge_count()), std::to_string(inst.level), detail, ok ? "pass" : "FAIL"});
  }
  r.result = Json{{"all_pass", all}, {"instances", instances}};
  r.tables.push_back(std::move(t));
  return r;
}

}  // namespace iwgraph::cli
