#pragma once

#include <map>
#include <memory>
#include <string>

#include "chardual/verify.hpp"

namespace testing_support {

inline const std::vector<chardual::GroupSpec>& catalog() {
  static const auto specs = chardual::load_catalog(CHARDUAL_DEFAULT_CATALOG);
  return specs;
}

/// Enumerated group, classes and computed table, built once per name.
inline const chardual::GroupContext& context(const std::string& name) {
  static std::map<std::string, std::unique_ptr<chardual::GroupContext>> cache;
  auto& slot = cache[name];
  if (!slot) {
    const auto* spec = chardual::find_group(catalog(), name);
    if (!spec) throw std::runtime_error("no catalog group " + name);
    slot = std::make_unique<chardual::GroupContext>(*spec);
  }
  return *slot;
}

inline chardual::Cyclotomic integer(std::uint64_t e, long v) { return chardual::Cyclotomic::rational(e, v); }

}  // namespace testing_support
