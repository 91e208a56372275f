#include "config.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "iwgraph/errors.hpp"
#include "json.hpp"
#include "report.hpp"

namespace iwgraph::cli {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ConfigError(where + " is missing \"" + key + "\"");
  return obj.at(key);
}

std::int64_t as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ConfigError(what + " must be an integer");
  return j.get<std::int64_t>();
}

std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw ConfigError(what + " must be a string");
  return j.get<std::string>();
}

TowerGroupSpec parse_group(const json& g) {
  const std::string kind = as_string(require(g, "kind", "group"), "group.kind");
  const std::int64_t p = as_int(require(g, "p", "group"), "group.p");
  if (!is_prime(p)) throw ConfigError("p must be prime");
  TowerGroupSpec spec;
  if (kind == "abelian") {
    spec = TowerGroupSpec::abelian(p, static_cast<int>(as_int(require(g, "rank", "group"), "group.rank")));
  } else if (kind == "metacyclic") {
    std::int64_t u = 0;
    if (g.contains("action_unit")) {
      const json& a = g.at("action_unit");
      if (a.is_string()) {
        if (a.get<std::string>() != "1+p") throw ConfigError("group.action_unit must be an integer or \"1+p\"");
      } else {
        u = as_int(a, "group.action_unit");
      }
    }
    spec = TowerGroupSpec::metacyclic(p, u);
  } else {
    throw ConfigError("unknown group kind " + kind);
  }
  spec.validate();
  return spec;
}

Word parse_word(const json& w, const std::string& edge) {
  if (!w.is_array()) throw ConfigError("voltage of edge " + edge + " must be a list of [generator, exponent] pairs");
  Word out;
  for (const auto& term : w) {
    if (!term.is_array() || term.size() != 2)
      throw ConfigError("voltage of edge " + edge + " must be a list of [generator, exponent] pairs");
    out.push_back({static_cast<int>(as_int(term[0], "generator index")), as_int(term[1], "exponent")});
  }
  return out;
}

CycMatrix parse_matrix(const json& m, const std::string& what) {
  if (!m.is_array() || m.empty()) throw ConfigError(what + " must be a nonempty list of rows");
  const std::size_t n = m.size();
  CycMatrix out(n, n, CyclotomicInteger(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n) throw ConfigError(what + " must be square");
    for (std::size_t j = 0; j < n; ++j) out(i, j) = cyclotomic_from_json(m[i][j]);
  }
  return out;
}

}  // namespace

Representation RepresentationConfig::build(const TowerGroupSpec& spec) const {
  return Representation(FiniteGroup(spec, level), generator_images, name);
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 computation failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

JobConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  const TowerGroupSpec spec = parse_group(require(doc, "group", "config"));

  const json& g = require(doc, "graph", "config");
  Multigraph base;
  for (const auto& v : require(g, "vertices", "graph")) base.add_vertex(as_string(v, "vertex id"));
  std::map<std::string, std::pair<std::string, std::string>> orientation;
  for (const auto& e : require(g, "edges", "graph")) {
    const std::string id = as_string(require(e, "id", "edge"), "edge id");
    const json& ends = require(e, "ends", "edge " + id);
    if (!ends.is_array() || ends.size() != 2) throw ConfigError("edge " + id + " must have exactly two ends");
    base.add_edge(id, as_string(ends[0], "vertex id"), as_string(ends[1], "vertex id"));
  }
  if (doc.contains("orientation")) {
    for (const auto& [id, ends] : doc.at("orientation").items()) {
      if (!ends.is_array() || ends.size() != 2) throw ConfigError("orientation of edge " + id + " must be [tail, head]");
      orientation[id] = {as_string(ends[0], "vertex id"), as_string(ends[1], "vertex id")};
    }
  }

  std::map<std::string, Word> voltages;
  const json& vmap = require(doc, "voltages", "config");
  if (!vmap.is_object()) throw ConfigError("voltages must map edge ids to words");
  for (const auto& [id, w] : vmap.items()) voltages[id] = parse_word(w, id);

  JobConfig cfg{doc.value("name", std::string{}), sha256_hex(text),
                VoltageAssignment::from_maps(std::move(base), spec, voltages, orientation), std::nullopt,
                std::nullopt, std::nullopt, std::nullopt, {}};

  if (doc.contains("subgroup")) {
    SubgroupSpec h;
    h.quotient_generator = static_cast<int>(
        as_int(require(doc.at("subgroup"), "quotient_generator", "subgroup"), "subgroup.quotient_generator"));
    h.validate(spec);
    cfg.subgroup = h;
  }
  if (doc.contains("levels")) {
    const json& l = doc.at("levels");
    if (l.contains("level")) cfg.level = static_cast<int>(as_int(l.at("level"), "levels.level"));
    if (l.contains("max_level")) cfg.max_level = static_cast<int>(as_int(l.at("max_level"), "levels.max_level"));
  }
  if (doc.contains("output")) cfg.out_dir = as_string(require(doc.at("output"), "dir", "output"), "output.dir");
  if (doc.contains("representations")) {
    for (const auto& r : doc.at("representations")) {
      RepresentationConfig rc;
      rc.name = as_string(require(r, "name", "representation"), "representation name");
      rc.level = static_cast<int>(as_int(require(r, "level", "representation " + rc.name), "representation level"));
      const json& gens = require(r, "generators", "representation " + rc.name);
      if (!gens.is_array() || static_cast<int>(gens.size()) != spec.generator_count())
        throw ConfigError("representation " + rc.name + " must give one matrix per generator");
      for (const auto& m : gens) rc.generator_images.push_back(parse_matrix(m, "representation " + rc.name));
      try {
        rc.build(spec);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("representation " + rc.name + ": " + e.what());
      }
      cfg.representations.push_back(std::move(rc));
    }
  }
  return cfg;
}

JobConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

}  // namespace iwgraph::cli
