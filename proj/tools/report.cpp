#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "iwgraph/errors.hpp"
#include "iwgraph/version.hpp"

namespace iwgraph::cli {

namespace {

template <class J>
Integer integer_from(const J& j) {
  if (j.is_number_integer()) return from_int64(j.template get<std::int64_t>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.template get<std::string>(), 10) != 0) throw ConfigError("malformed integer string");
    return x;
  }
  throw ConfigError("expected an integer");
}

std::pair<std::int64_t, int> split_conductor(std::int64_t n) {
  if (n == 1) return {2, 0};
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (n != 1) throw ConfigError("cyclotomic conductor must be a prime power");
    return {p, k};
  }
  return {n, 1};
}

template <class J>
CyclotomicInteger cyclotomic_from(const J& j) {
  if (j.is_number_integer() || j.is_string()) return CyclotomicInteger(integer_from(j));
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
    throw ConfigError("cyclotomic integer must be {\"conductor\", \"coeffs\"}");
  const std::int64_t n = j.at("conductor").template get<std::int64_t>();
  if (n < 1) throw ConfigError("cyclotomic conductor must be positive");
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(integer_from(c));
  const auto [p, k] = split_conductor(n);
  if (k == 0) {
    if (coeffs.size() != 1) throw ConfigError("conductor 1 takes exactly one coefficient");
    return CyclotomicInteger(coeffs[0]);
  }
  try {
    return CyclotomicInteger(p, k, std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::string pad(const std::string& s, std::size_t width) { return s + std::string(width - s.size(), ' '); }

Json provenance_json(const Provenance& prov) {
  Json modules = Json::object();
  for (const auto m : kModules) modules[std::string(m)] = std::string(kVersion);
  return Json{{"tool", "iwgraph"},
              {"version", std::string(kVersion)},
              {"modules", modules},
              {"config", Json{{"name", prov.config_name}, {"sha256", prov.config_sha256}}}};
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (fits_int64(x)) return to_int64(x);
  return x.get_str();
}

Integer integer_from_json(const nlohmann::json& j) { return integer_from(j); }
Integer integer_from_json(const Json& j) { return integer_from(j); }

Json cyclotomic_to_json(const CyclotomicInteger& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(integer_to_json(c));
  return Json{{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

CyclotomicInteger cyclotomic_from_json(const nlohmann::json& j) { return cyclotomic_from(j); }
CyclotomicInteger cyclotomic_from_json(const Json& j) { return cyclotomic_from(j); }

Json polynomial_to_json(const IntPolynomial& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(integer_to_json(c));
  return out;
}

Json polynomial_to_json(const CycPolynomial& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(cyclotomic_to_json(c));
  return out;
}

IntPolynomial int_polynomial_from_json(const Json& j) {
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from(x));
  return IntPolynomial(std::move(c));
}

CycPolynomial cyc_polynomial_from_json(const Json& j) {
  std::vector<CyclotomicInteger> c;
  for (const auto& x : j) c.push_back(cyclotomic_from(x));
  return CycPolynomial(std::move(c));
}

std::string render_json(const Report& r, const Provenance& prov) {
  Json doc = provenance_json(prov);
  doc["command"] = r.command;
  doc["parameters"] = r.parameters;
  doc["result"] = r.result;
  return doc.dump(2) + "\n";
}

std::string render_tsv(const Report& r, const Provenance& prov) {
  std::ostringstream out;
  out << "# tool\tiwgraph " << kVersion << "\n";
  out << "# modules\t";
  for (std::size_t i = 0; i < kModules.size(); ++i) out << (i ? "," : "") << kModules[i] << "=" << kVersion;
  out << "\n# config\t" << (prov.config_name.empty() ? "-" : prov.config_name) << "\n";
  out << "# config_sha256\t" << prov.config_sha256 << "\n";
  out << "# command\t" << r.command << "\n";
  for (const auto& [key, value] : r.parameters.items())
    out << "# " << key << "\t" << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  for (const auto& t : r.tables) {
    out << "\n## " << t.title << "\n";
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows)
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c + 1 == cells.size()) out << cells[c];
        else out << pad(cells[c], width[c]) << "\t";
      }
      out << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
  return out.str();
}

}  // namespace iwgraph::cli
