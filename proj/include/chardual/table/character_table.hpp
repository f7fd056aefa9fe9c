#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "chardual/arith/cyclotomic.hpp"
#include "chardual/group/conjugacy.hpp"

namespace chardual {

struct Character {
  std::vector<Cyclotomic> values;  // one per class, class 0 = identity

  Integer degree() const { return values.at(0).as_rational_integer(); }
  const Cyclotomic& operator[](std::size_t i) const { return values[i]; }
  bool operator==(const Character&) const = default;
};

/// Where a table came from: the Dixon prime used, or the digest of a file.
struct TableProvenance {
  std::string source = "computed";  // "computed" | "file"
  std::uint64_t dixon_prime = 0;
  std::string path;
  std::string digest;
};

struct CharacterTable {
  ClassStructurePtr classes;
  std::vector<Character> rows;
  TableProvenance provenance;

  std::size_t class_count() const { return classes->class_count(); }
  std::uint64_t order() const { return classes->order; }
  std::uint64_t exponent() const { return classes->exponent; }
  const std::string& group() const { return classes->group; }
  const Character& operator[](std::size_t r) const { return rows[r]; }

  /// Equality of the mathematical content; provenance is ignored.
  friend bool operator==(const CharacterTable& a, const CharacterTable& b) {
    return *a.classes == *b.classes && a.rows == b.rows;
  }
};

inline bool is_trivial(const Character& chi) {
  return std::all_of(chi.values.begin(), chi.values.end(),
                     [](const Cyclotomic& z) { return z.is_rational() && z.as_rational() == 1; });
}

/// Trivial character first, the rest by (degree, lexicographic values).
inline void normalize_row_order(CharacterTable& t) {
  std::stable_sort(t.rows.begin(), t.rows.end(), [](const Character& a, const Character& b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (auto da = a.degree(), db = b.degree(); da != db) return da < db;
    return a.values < b.values;
  });
}

struct OrthogonalityViolation {
  enum class Kind { Row, Column } kind;
  std::size_t first, second;
  Cyclotomic expected, actual;
};

/// Exact row and column orthogonality; returns every violated pair.
inline std::vector<OrthogonalityViolation> verify_orthogonality(const CharacterTable& t) {
  std::vector<OrthogonalityViolation> out;
  const auto& cs = *t.classes;
  const auto e = cs.exponent;
  const auto k = cs.class_count();
  const auto r = t.rows.size();

  std::vector<std::vector<Cyclotomic>> conj(r);
  for (std::size_t a = 0; a < r; ++a)
    for (const auto& z : t.rows[a].values) conj[a].push_back(z.conjugate());

  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      Cyclotomic sum(e);
      for (std::size_t i = 0; i < k; ++i) sum += t.rows[a][i] * conj[b][i] * Rational(cs.sizes[i]);
      sum *= make_rational(1, Integer(static_cast<unsigned long>(cs.order)));
      auto want = Cyclotomic::rational(e, a == b ? 1 : 0);
      if (sum != want) out.push_back({OrthogonalityViolation::Kind::Row, a, b, want, sum});
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic sum(e);
      for (std::size_t a = 0; a < r; ++a) sum += t.rows[a][i] * conj[a][j];
      auto want = Cyclotomic::rational(e, i == j ? Rational(cs.centralizer_order(i)) : Rational(0));
      if (sum != want) out.push_back({OrthogonalityViolation::Kind::Column, i, j, want, sum});
    }
  }
  return out;
}

/// Every structural invariant of an irreducible character table, as a list
/// of human-readable problems (empty when the table is sound).
inline std::vector<std::string> table_problems(const CharacterTable& t) {
  std::vector<std::string> out;
  const auto& cs = *t.classes;
  const auto k = cs.class_count();
  if (k == 0 || cs.sizes[0] != 1 || cs.rep_orders[0] != 1) out.push_back("class 0 is not the identity class");
  if (t.rows.size() != k) {
    out.push_back(std::to_string(t.rows.size()) + " rows for " + std::to_string(k) + " classes");
    return out;
  }
  std::uint64_t total = 0;
  for (auto s : cs.sizes) total += s;
  if (total != cs.order) out.push_back("class sizes do not sum to the group order");
  if (cs.inverse_class.size() != k || cs.power_map.size() != k || cs.rep_orders.size() != k) {
    out.push_back("class metadata has inconsistent lengths");
    return out;
  }

  Integer sum_sq = 0;
  for (std::size_t a = 0; a < k; ++a) {
    const auto& row = t.rows[a];
    if (row.values.size() != k) {
      out.push_back("row " + std::to_string(a) + " has wrong length");
      return out;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (row[i].order() != cs.exponent) out.push_back("row " + std::to_string(a) + " has a value of wrong order");
      else if (!row[i].has_integer_coefficients())
        out.push_back("row " + std::to_string(a) + " class " + std::to_string(i) + " is not an algebraic integer");
    }
    if (!out.empty()) return out;
    if (!row[0].is_rational_integer() || row[0].as_rational_integer() < 1) {
      out.push_back("row " + std::to_string(a) + " has a non-positive degree");
      continue;
    }
    auto d = row.degree();
    if (Integer(static_cast<unsigned long>(cs.order)) % d != 0)
      out.push_back("degree of row " + std::to_string(a) + " does not divide |G|");
    sum_sq += d * d;
    for (std::size_t i = 0; i < k; ++i)
      if (row[cs.inverse_class[i]] != row[i].conjugate())
        out.push_back("row " + std::to_string(a) + " is not conjugate-symmetric at class " + std::to_string(i));
  }
  if (sum_sq != static_cast<unsigned long>(cs.order)) out.push_back("sum of squared degrees differs from |G|");
  if (!is_trivial(t.rows[0])) out.push_back("row 0 is not the trivial character");
  for (const auto& v : verify_orthogonality(t))
    out.push_back(std::string(v.kind == OrthogonalityViolation::Kind::Row ? "row" : "column") +
                  " orthogonality fails for (" + std::to_string(v.first) + ", " + std::to_string(v.second) +
                  "): expected " + v.expected.str() + ", got " + v.actual.str());
  return out;
}

}  // namespace chardual
