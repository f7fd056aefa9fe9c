#pragma once

// JSON table files:
//   { "group": str, "order": int, "exponent": int, "class_sizes": [int...],
//     "rep_orders": [int...], "inverse_class": [int...],
//     "power_map": [[int...]...], "rows": [[Cyclotomic...]...] }
// with Cyclotomic = { "e": int, "num": [int...], "den": [int...] } in
// canonical power-basis form.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include <json.hpp>

#include "chardual/table/character_table.hpp"

namespace chardual {

using json = nlohmann::json;

inline json to_json(const Cyclotomic& z) {
  json num = json::array(), den = json::array();
  for (const auto& c : z.coefficients()) {
    num.push_back(to_int64(c.get_num()));
    den.push_back(to_int64(c.get_den()));
  }
  return {{"e", z.order()}, {"num", std::move(num)}, {"den", std::move(den)}};
}

/// Reads a Cyclotomic, rejecting anything not already in canonical form.
inline Cyclotomic cyclotomic_from_json(const json& j) {
  if (!j.is_object() || !j.contains("e") || !j.contains("num") || !j.contains("den"))
    throw TableError("cyclotomic must be an object with e, num, den");
  if (!j["e"].is_number_integer() || j["e"].get<std::int64_t>() < 1) throw TableError("cyclotomic order must be >= 1");
  const auto e = j["e"].get<std::uint64_t>();
  const auto& num = j["num"];
  const auto& den = j["den"];
  if (!num.is_array() || !den.is_array() || num.size() != den.size())
    throw TableError("cyclotomic num/den must be arrays of equal length");
  if (num.size() != euler_phi(e))
    throw TableError("non-canonical cyclotomic: order " + std::to_string(e) + " needs " +
                     std::to_string(euler_phi(e)) + " coefficients, got " + std::to_string(num.size()));
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (!num[i].is_number_integer() || !den[i].is_number_integer()) throw TableError("cyclotomic entries must be integers");
    Integer n(static_cast<long>(num[i].get<std::int64_t>()));
    Integer d(static_cast<long>(den[i].get<std::int64_t>()));
    if (d <= 0) throw TableError("non-canonical cyclotomic: denominator must be positive");
    Integer g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) throw TableError("non-canonical cyclotomic: fraction not in lowest terms");
    coeffs.push_back(make_rational(n, d));
  }
  return Cyclotomic::from_coefficients(e, std::move(coeffs));
}

inline json to_json(const CharacterTable& t) {
  const auto& cs = *t.classes;
  json rows = json::array();
  for (const auto& chi : t.rows) {
    json row = json::array();
    for (const auto& z : chi.values) row.push_back(to_json(z));
    rows.push_back(std::move(row));
  }
  return {{"group", cs.group},           {"order", cs.order},
          {"exponent", cs.exponent},     {"class_sizes", cs.sizes},
          {"rep_orders", cs.rep_orders}, {"inverse_class", cs.inverse_class},
          {"power_map", cs.power_map},   {"rows", std::move(rows)}};
}

namespace detail {

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.contains(key)) throw TableError(std::string("table file lacks '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& ex) {
    throw TableError(std::string("table field '") + key + "': " + ex.what());
  }
}

/// 64-bit FNV-1a of a byte string, as 16 hex digits.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace detail

/// Parses and fully re-verifies a table (orthogonality, degrees, integrality).
inline CharacterTable table_from_json(const json& j) {
  if (!j.is_object()) throw TableError("table file must hold a JSON object");
  auto cs = std::make_shared<ClassStructure>();
  cs->group = detail::get_field<std::string>(j, "group");
  cs->order = detail::get_field<std::uint64_t>(j, "order");
  cs->exponent = detail::get_field<std::uint64_t>(j, "exponent");
  cs->sizes = detail::get_field<std::vector<std::uint64_t>>(j, "class_sizes");
  cs->rep_orders = detail::get_field<std::vector<std::uint64_t>>(j, "rep_orders");
  cs->inverse_class = detail::get_field<std::vector<std::size_t>>(j, "inverse_class");
  cs->power_map = detail::get_field<std::vector<std::vector<std::size_t>>>(j, "power_map");
  const auto k = cs->sizes.size();
  if (cs->order == 0 || cs->exponent == 0 || k == 0) throw TableError("order, exponent and class count must be positive");
  if (cs->rep_orders.size() != k || cs->inverse_class.size() != k || cs->power_map.size() != k)
    throw TableError("class metadata arrays must all have one entry per class");
  for (std::size_t i = 0; i < k; ++i) {
    if (cs->sizes[i] == 0 || cs->order % cs->sizes[i] != 0) throw TableError("class sizes must divide the order");
    if (cs->inverse_class[i] >= k) throw TableError("inverse_class entry out of range");
    if (cs->power_map[i].size() != cs->exponent) throw TableError("power_map rows need one entry per exponent");
    for (auto c : cs->power_map[i])
      if (c >= k) throw TableError("power_map entry out of range");
  }

  const auto& rows = j.contains("rows") ? j["rows"] : throw TableError("table file lacks 'rows'");
  if (!rows.is_array()) throw TableError("'rows' must be an array");
  CharacterTable t;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != k) throw TableError("each row needs one value per class");
    Character chi;
    for (const auto& v : row) {
      auto z = cyclotomic_from_json(v);
      if (z.order() != cs->exponent) throw TableError("character values must live in Q(eps_exponent)");
      chi.values.push_back(std::move(z));
    }
    t.rows.push_back(std::move(chi));
  }
  t.classes = std::move(cs);
  if (auto problems = table_problems(t); !problems.empty()) {
    std::string msg = "invalid character table";
    for (const auto& p : problems) msg += "; " + p;
    throw TableError(msg);
  }
  return t;
}

inline CharacterTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TableError("cannot open table file " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& ex) {
    throw TableError("table file " + path + " is not JSON: " + ex.what());
  }
  auto t = table_from_json(j);
  t.provenance.source = "file";
  t.provenance.path = path;
  t.provenance.digest = detail::fnv1a_hex(bytes);
  return t;
}

inline void save_table(const CharacterTable& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw TableError("cannot write table file " + path);
  out << to_json(t).dump(1) << '\n';
  if (!out) throw TableError("failed writing table file " + path);
}

}  // namespace chardual
