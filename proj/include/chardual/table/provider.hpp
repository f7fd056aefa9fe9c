#pragma once

#include <memory>
#include <optional>
#include <string>

#include "chardual/table/dixon.hpp"
#include "chardual/table/table_io.hpp"

namespace chardual {

/// Source of an irreducible character table: Dixon-Schneider or a file.
class TableProvider {
 public:
  virtual ~TableProvider() = default;
  virtual CharacterTable table() const = 0;
};

class ComputedTableProvider final : public TableProvider {
 public:
  ComputedTableProvider(const Group& g, const ConjugacyData& cd, std::optional<std::uint64_t> prime = {})
      : group_(g), cd_(cd), prime_(prime) {}
  CharacterTable table() const override { return compute_table(group_, cd_, prime_); }

 private:
  const Group& group_;
  const ConjugacyData& cd_;
  std::optional<std::uint64_t> prime_;
};

/// Loads a table file; when class data is supplied the file must describe
/// the same class structure.
class FileTableProvider final : public TableProvider {
 public:
  explicit FileTableProvider(std::string path, ClassStructurePtr expected = nullptr)
      : path_(std::move(path)), expected_(std::move(expected)) {}

  CharacterTable table() const override {
    auto t = load_table(path_);
    if (expected_) {
      auto mine = *expected_;
      auto theirs = *t.classes;
      mine.group = theirs.group;  // names may differ between catalog and file
      if (!(mine == theirs))
        throw TableError("table file " + path_ + " does not match the class structure of " + expected_->group);
      t.classes = expected_;
    }
    return t;
  }

 private:
  std::string path_;
  ClassStructurePtr expected_;
};

}  // namespace chardual
