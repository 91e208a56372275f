#pragma once

#include <string>
#include <vector>

#include "iwgraph/cyclotomic.hpp"
#include "iwgraph/polynomial.hpp"
#include "json.hpp"

namespace iwgraph::cli {

using Json = nlohmann::ordered_json;

/// Integers become JSON numbers when they fit in int64 and decimal strings otherwise.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);
Integer integer_from_json(const Json& j);

/// {"conductor": p^k, "coeffs": [...]} in the power basis of Z[zeta_{p^k}].
/// A plain integer is accepted on input as a rational value.
Json cyclotomic_to_json(const CyclotomicInteger& x);
CyclotomicInteger cyclotomic_from_json(const nlohmann::json& j);
CyclotomicInteger cyclotomic_from_json(const Json& j);

/// Ascending coefficient arrays.
Json polynomial_to_json(const IntPolynomial& f);
Json polynomial_to_json(const CycPolynomial& f);
IntPolynomial int_polynomial_from_json(const Json& j);
CycPolynomial cyc_polynomial_from_json(const Json& j);

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  Json parameters = Json::object();
  Json result = Json::object();
  std::vector<Table> tables;
};

struct Provenance {
  std::string config_name;
  std::string config_sha256;
};

std::string render_json(const Report& r, const Provenance& prov);
/// Header lines "# key<TAB>value", then each table with cells padded to the
/// column width and separated by tabs.
std::string render_tsv(const Report& r, const Provenance& prov);

}  // namespace iwgraph::cli
