#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commands.hpp"
#include "config.hpp"
#include "iwgraph/errors.hpp"
#include "iwgraph/iwasawa.hpp"
#include "iwgraph/jacobian.hpp"
#include "iwgraph/version.hpp"
#include "iwgraph/zeta.hpp"
#include "report.hpp"

namespace py = pybind11;
using namespace iwgraph;

namespace {

py::int_ to_py(const Integer& x) {
  PyObject* o = PyLong_FromString(x.get_str().c_str(), nullptr, 10);
  if (!o) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(o);
}

py::list to_py(const std::vector<Integer>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list to_py(const IntPolynomial& f) { return to_py(f.coeffs()); }

/// (conductor, power-basis coefficients)
py::tuple to_py(const CyclotomicInteger& x) { return py::make_tuple(x.conductor(), to_py(x.coeffs())); }

py::dict structure(const AbelianGroupStructure& a) {
  py::dict d;
  d["free_rank"] = a.free_rank;
  d["invariants"] = to_py(a.torsion);
  d["order"] = to_py(a.torsion_order());
  return d;
}

Word to_word(const std::vector<std::pair<int, std::int64_t>>& w) {
  Word out;
  for (const auto& [g, e] : w) out.push_back({g, e});
  return out;
}

cli::CommandOptions options(std::optional<int> level, std::optional<int> max_level, std::optional<int> probe,
                            std::optional<int> count) {
  cli::CommandOptions o;
  o.level = level;
  o.max_level = max_level;
  o.probe_level = probe;
  o.count = count;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations on voltage covers of graphs and their Iwasawa theory";
  m.attr("__version__") = std::string(kVersion);

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Multigraph>(m, "Multigraph")
      .def(py::init<>())
      .def("add_vertex", &Multigraph::add_vertex, py::arg("id"))
      .def("add_edge", py::overload_cast<const std::string&, const std::string&, const std::string&>(&Multigraph::add_edge),
           py::arg("id"), py::arg("u"), py::arg("v"))
      .def_property_readonly("vertices", &Multigraph::vertices)
      .def_property_readonly("edges",
                             [](const Multigraph& x) {
                               py::list out;
                               for (const auto& e : x.edges())
                                 out.append(py::make_tuple(e.id, x.vertices()[e.u], x.vertices()[e.v]));
                               return out;
                             })
      .def("vertex_count", &Multigraph::vertex_count)
      .def("edge_count", &Multigraph::edge_count)
      .def("euler_characteristic", &Multigraph::euler_characteristic);

  py::class_<TowerGroupSpec>(m, "TowerGroupSpec")
      .def_static("abelian", &TowerGroupSpec::abelian, py::arg("p"), py::arg("rank"))
      .def_static("metacyclic", &TowerGroupSpec::metacyclic, py::arg("p"), py::arg("action_unit") = 0)
      .def_readonly("p", &TowerGroupSpec::p)
      .def("unit", &TowerGroupSpec::unit)
      .def("__repr__", &TowerGroupSpec::describe);

  py::class_<VoltageAssignment>(m, "VoltageAssignment")
      .def(py::init([](Multigraph base, TowerGroupSpec spec,
                       const std::map<std::string, std::vector<std::pair<int, std::int64_t>>>& voltages,
                       const std::map<std::string, std::pair<std::string, std::string>>& orientation) {
             std::map<std::string, Word> words;
             for (const auto& [id, w] : voltages) words[id] = to_word(w);
             return VoltageAssignment::from_maps(std::move(base), spec, words, orientation);
           }),
           py::arg("graph"), py::arg("group"), py::arg("voltages"),
           py::arg("orientation") = std::map<std::string, std::pair<std::string, std::string>>{})
      .def_property_readonly("graph", &VoltageAssignment::base)
      .def_property_readonly("group", &VoltageAssignment::group);

  m.def("spanning_tree_count", [](const Multigraph& x) { return to_py(spanning_tree_count(x)); });
  m.def("jacobian_structure", [](const Multigraph& x) { return structure(jacobian_structure(x)); });
  m.def("picard_structure", [](const Multigraph& x) { return structure(picard_structure(x)); });
  m.def("is_connected", &is_connected);
  m.def("ihara_zeta_inverse", [](const Multigraph& x) {
    const ZetaData z = ihara_zeta_inverse(x);
    return py::make_tuple(z.chi, to_py(z.det_part));
  }, "(chi, ascending coefficients of det(I - Au + (D - I)u^2))");

  m.def("derive", [](const VoltageAssignment& a, int level) { return derive(a, level).graph(); }, py::arg("alpha"),
        py::arg("level"));
  m.def("connectivity_criterion", &connectivity_criterion);
  m.def("quotient_assignment", [](const VoltageAssignment& a, int g) { return quotient_assignment(a, SubgroupSpec{g}); },
        py::arg("alpha"), py::arg("quotient_generator"));

  m.def("interpolation_check", [](const VoltageAssignment& a, int level) {
    const auto rep = interpolation_check(a, level);
    py::list entries;
    for (const auto& e : rep.entries) {
      py::dict d;
      d["character"] = e.chi.exponents;
      d["h_value"] = to_py(e.h_value);
      d["nrd_value"] = to_py(e.nrd_value);
      d["equal"] = e.equal;
      entries.append(d);
    }
    py::dict out;
    out["all_pass"] = rep.all_pass;
    out["entries"] = entries;
    return out;
  }, py::arg("alpha"), py::arg("level"));
  m.def("factorization_check", [](const VoltageAssignment& a, int level) {
    const auto rep = factorization_check(a, level);
    py::dict out;
    out["passed"] = rep.passed();
    out["chi"] = rep.derived.chi;
    out["exponent_sum"] = rep.exponent_sum;
    out["det_part"] = to_py(rep.derived.det_part);
    return out;
  }, py::arg("alpha"), py::arg("level"));

  m.def("tower_e", [](const VoltageAssignment& a, int max_level) { return tower_en(a, max_level).e; }, py::arg("alpha"),
        py::arg("max_level"));
  m.def("fit_iwasawa", [](const std::vector<std::int64_t>& e, std::int64_t p) {
    const auto f = fit_iwasawa(e, p);
    py::dict out;
    out["mu"] = to_py(f.mu);
    out["lambda"] = to_py(f.lambda);
    out["nu"] = to_py(f.nu);
    out["integral"] = f.integral;
    out["stable"] = f.stable;
    out["residuals"] = to_py(f.residuals);
    return out;
  }, py::arg("e"), py::arg("p"));
  m.def("lambda1_determinant", [](const VoltageAssignment& a) {
    const auto d = lambda1_determinant(a);
    py::dict out;
    out["shift"] = d.k;
    out["cleared"] = to_py(d.cleared);
    out["f"] = to_py(d.f);
    out["laurent"] = d.laurent_string();
    return out;
  });
  m.def("mu_lambda_from_poly", [](const std::vector<py::int_>& coeffs, std::int64_t p) {
    std::vector<Integer> c;
    for (const auto& x : coeffs) c.emplace_back(py::str(x).cast<std::string>());
    return mu_lambda_from_poly(IntPolynomial(std::move(c)), p);
  }, py::arg("coeffs"), py::arg("p"));
  m.def("mu_lower_bound", &mu_lower_bound, py::arg("alpha"), py::arg("probe_level") = 0);
  m.def("mhg_check", [](const VoltageAssignment& a, int g, int probe) {
    const auto v = mhg_check(a, SubgroupSpec{g}, probe);
    py::dict out;
    out["mu1"] = v.mu1;
    out["lambda1"] = v.lambda1;
    out["mu_lower"] = v.mu_lower;
    out["verdict"] = to_string(v.verdict);
    out["justification"] = v.justification;
    out["mu_lambda"] = v.mu_lambda ? py::object(py::int_(*v.mu_lambda)) : py::object(py::none());
    out["f"] = to_py(v.det.f);
    return out;
  }, py::arg("alpha"), py::arg("quotient_generator"), py::arg("probe_level") = 0);

  m.def("run_json", [](const std::string& command, const std::string& config_text, std::optional<int> level,
                       std::optional<int> max_level, std::optional<int> probe_level) {
    const cli::JobConfig cfg = cli::parse_config_text(config_text);
    const cli::Report r = cli::run_command(command, cfg, options(level, max_level, probe_level, std::nullopt));
    return cli::render_json(r, cli::Provenance{cfg.name, cfg.sha256});
  }, py::arg("command"), py::arg("config_text"), py::arg("level") = py::none(), py::arg("max_level") = py::none(),
        py::arg("probe_level") = py::none(), "Runs a CLI subcommand and returns its JSON report.");
  m.def("random_suite_json", [](const std::string& command, std::uint64_t seed, std::optional<int> count) {
    const auto opt = options(std::nullopt, std::nullopt, std::nullopt, count);
    return cli::render_json(cli::run_random_suite(command, seed, opt), cli::random_suite_provenance(command, seed, opt));
  }, py::arg("command"), py::arg("seed"), py::arg("count") = py::none());
}
