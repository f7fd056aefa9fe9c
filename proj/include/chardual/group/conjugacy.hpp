#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <vector>

#include "chardual/group/group.hpp"

namespace chardual {

/// Class-level data shared by conjugacy computations and character tables.
/// Class 0 is always the identity class.
struct ClassStructure {
  std::string group;
  std::uint64_t order = 1;
  std::uint64_t exponent = 1;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> rep_orders;
  std::vector<std::size_t> inverse_class;
  /// power_map[i][t] = class of g_i^t for 0 <= t < exponent.
  std::vector<std::vector<std::size_t>> power_map;

  std::size_t class_count() const { return sizes.size(); }
  std::uint64_t centralizer_order(std::size_t i) const { return order / sizes[i]; }
  bool is_real(std::size_t i) const { return inverse_class[i] == i; }

  bool operator==(const ClassStructure&) const = default;
};

using ClassStructurePtr = std::shared_ptr<const ClassStructure>;

struct ConjugacyData {
  ClassStructurePtr classes;
  std::vector<std::size_t> class_of;  // element -> class
  std::vector<Group::Element> representatives;
  std::vector<std::vector<Group::Element>> members;
  std::vector<std::uint64_t> centralizer_orders;
  std::vector<bool> real_flags;

  std::size_t class_count() const { return representatives.size(); }
  const std::vector<std::uint64_t>& sizes() const { return classes->sizes; }
};

/// Conjugacy classes as orbits under conjugation. Orbits are discovered in
/// element order, so every representative is the least element of its class;
/// classes are then ordered by size, ties by representative.
inline ConjugacyData conjugacy_data(const Group& g) {
  const auto n = g.order();
  constexpr auto unassigned = static_cast<std::size_t>(-1);
  ConjugacyData cd;
  cd.class_of.assign(n, unassigned);
  for (Group::Element x = 0; x < n; ++x) {
    if (cd.class_of[x] != unassigned) continue;
    const auto k = cd.representatives.size();
    cd.representatives.push_back(x);
    cd.members.emplace_back();
    for (Group::Element y = 0; y < n; ++y) {
      auto c = g.conjugate(x, y);
      if (cd.class_of[c] == unassigned) {
        cd.class_of[c] = k;
        cd.members[k].push_back(c);
      }
    }
  }

  {
    std::vector<std::size_t> perm(cd.representatives.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return cd.members[a].size() < cd.members[b].size();
    });
    std::vector<std::size_t> rank(perm.size());
    for (std::size_t r = 0; r < perm.size(); ++r) rank[perm[r]] = r;
    std::vector<Group::Element> reps;
    std::vector<std::vector<Group::Element>> members;
    for (auto old : perm) {
      reps.push_back(cd.representatives[old]);
      members.push_back(std::move(cd.members[old]));
    }
    cd.representatives = std::move(reps);
    cd.members = std::move(members);
    for (auto& c : cd.class_of) c = rank[c];
  }

  auto cs = std::make_shared<ClassStructure>();
  cs->group = g.name();
  cs->order = n;
  cs->exponent = g.exponent();
  const auto k = cd.representatives.size();
  for (std::size_t i = 0; i < k; ++i) {
    auto rep = cd.representatives[i];
    cs->sizes.push_back(cd.members[i].size());
    cs->rep_orders.push_back(g.element_order(rep));
    cs->inverse_class.push_back(cd.class_of[g.inv(rep)]);
    std::vector<std::size_t> powers(g.exponent());
    Group::Element acc = g.identity();
    for (std::uint64_t t = 0; t < g.exponent(); ++t, acc = g.mul(acc, rep)) powers[t] = cd.class_of[acc];
    cs->power_map.push_back(std::move(powers));
    cd.centralizer_orders.push_back(n / cd.members[i].size());
    cd.real_flags.push_back(cs->inverse_class[i] == i);
  }
  cd.classes = std::move(cs);
  return cd;
}

/// Indices of classes closed under inversion.
inline std::vector<std::size_t> real_classes(const ClassStructure& cs) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cs.class_count(); ++i)
    if (cs.is_real(i)) out.push_back(i);
  return out;
}

inline std::vector<std::size_t> real_classes(const ConjugacyData& cd) { return real_classes(*cd.classes); }

/// a_ijl = #{(x, y) in K_i x K_j : xy = g_l}, one entry per class l.
inline std::vector<std::uint64_t> class_mult_coefficients(const Group& g, const ConjugacyData& cd, std::size_t i,
                                                          std::size_t j) {
  std::vector<std::uint64_t> out(cd.class_count(), 0);
  for (std::size_t l = 0; l < cd.class_count(); ++l) {
    auto target = cd.representatives[l];
    for (auto x : cd.members[i])
      if (cd.class_of[g.mul(g.inv(x), target)] == j) ++out[l];
  }
  return out;
}

}  // namespace chardual
