#pragma once

#include <cstdint>

#include "chardual/group/group.hpp"

namespace chardual {

inline constexpr std::uint64_t kCommutatorCapSingle = 24;
inline constexpr std::uint64_t kCommutatorCapDouble = 12;

/// Brute-force #{(a1, b1, ..., an, bn) : [a1, b1] ... [an, bn] = target}, n in {1, 2}.
/// A nonzero cap replaces the default order limit for the chosen n.
inline std::uint64_t count_commutator_solutions(const Group& g, Group::Element target, int n, std::uint64_t cap = 0) {
  const auto N = g.order();
  if (n == 1) {
    const auto limit = cap ? cap : kCommutatorCapSingle;
    if (N > limit) throw CapExceeded("commutator count with n=1 needs |G| <= " + std::to_string(limit));
    std::uint64_t count = 0;
    for (Group::Element a = 0; a < N; ++a)
      for (Group::Element b = 0; b < N; ++b) count += g.commutator(a, b) == target;
    return count;
  }
  if (n == 2) {
    const auto limit = cap ? cap : kCommutatorCapDouble;
    if (N > limit) throw CapExceeded("commutator count with n=2 needs |G| <= " + std::to_string(limit));
    std::uint64_t count = 0;
    for (Group::Element a1 = 0; a1 < N; ++a1)
      for (Group::Element b1 = 0; b1 < N; ++b1) {
        auto c1 = g.commutator(a1, b1);
        for (Group::Element a2 = 0; a2 < N; ++a2)
          for (Group::Element b2 = 0; b2 < N; ++b2) count += g.mul(c1, g.commutator(a2, b2)) == target;
      }
    return count;
  }
  throw InvalidArgument("commutator count supports n = 1 or 2");
}

}  // namespace chardual
