#pragma once

// Group spec files: { "name": str, "degree": int, "generators": ["(1 2)", ...] }.
// A catalog file is a JSON list of these.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chardual/group/group.hpp"

namespace chardual {

/// Parses and validates a spec; every generator must parse at the stated degree.
inline GroupSpec group_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("group spec must be a JSON object");
  GroupSpec spec;
  try {
    spec.name = j.at("name").get<std::string>();
    auto degree = j.at("degree").get<std::int64_t>();
    if (degree < 1) throw ParseError("group '" + spec.name + "': degree must be positive");
    spec.degree = static_cast<std::size_t>(degree);
    spec.generators = j.at("generators").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed group spec: ") + ex.what());
  }
  for (const auto& g : spec.generators) parse_cycles(g, spec.degree);
  return spec;
}

inline nlohmann::json to_json(const GroupSpec& spec) {
  return {{"name", spec.name}, {"degree", spec.degree}, {"generators", spec.generators}};
}

namespace detail {

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(path + " is not valid JSON: " + ex.what());
  }
}

}  // namespace detail

inline GroupSpec load_group_spec(const std::string& path) { return group_spec_from_json(detail::read_json_file(path)); }

inline std::vector<GroupSpec> load_catalog(const std::string& path) {
  auto j = detail::read_json_file(path);
  if (!j.is_array()) throw ParseError("catalog " + path + " must be a JSON list of group specs");
  std::vector<GroupSpec> out;
  for (const auto& entry : j) out.push_back(group_spec_from_json(entry));
  return out;
}

/// Catalog entry by exact name, or nullptr.
inline const GroupSpec* find_group(const std::vector<GroupSpec>& catalog, const std::string& name) {
  for (const auto& spec : catalog)
    if (spec.name == name) return &spec;
  return nullptr;
}

}  // namespace chardual
