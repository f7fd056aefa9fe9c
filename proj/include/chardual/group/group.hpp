#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "chardual/errors.hpp"
#include "chardual/group/permutation.hpp"

namespace chardual {

/// Group given by permutation generators in cycle notation.
struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generators;
};

inline constexpr std::size_t kDefaultElementCap = 2000;

/// Fully enumerated finite permutation group with its multiplication table.
///
/// Element 0 is the identity; the remaining elements appear in the order
/// they were discovered by breadth-first closure.
class Group {
 public:
  using Element = std::size_t;

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  std::uint64_t exponent() const { return exponent_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(Element x) const { return elements_[x]; }

  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[a * elements_.size() + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  std::uint64_t element_order(Element a) const { return orders_[a]; }

  Element pow(Element a, std::uint64_t k) const {
    Element out = identity();
    k %= orders_[a];
    while (k--) out = mul(out, a);
    return out;
  }

  /// x^-1 g x
  Element conjugate(Element g, Element x) const { return mul(mul(inv(x), g), x); }

  /// [a, b] = a^-1 b^-1 a b
  Element commutator(Element a, Element b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  Element index_of(const Permutation& p) const {
    auto it = index_.find(p.images());
    if (it == index_.end()) throw InvalidArgument("permutation " + p.cycles() + " is not in " + name_);
    return it->second;
  }

  friend Group enumerate(const GroupSpec& spec, std::size_t cap);

 private:
  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::map<std::vector<Point>, Element> index_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint64_t> orders_;
  std::uint64_t exponent_ = 1;
};

/// Breadth-first closure of the generators, applied in sorted order.
inline Group enumerate(const GroupSpec& spec, std::size_t cap = kDefaultElementCap) {
  if (spec.degree == 0) throw ParseError("group '" + spec.name + "': degree must be positive");
  std::vector<Permutation> gens;
  for (const auto& text : spec.generators) gens.push_back(parse_cycles(text, spec.degree));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Group g;
  g.name_ = spec.name;
  g.degree_ = spec.degree;
  Permutation id(spec.degree);
  g.elements_.push_back(id);
  g.index_.emplace(id.images(), 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& s : gens) {
      auto y = g.elements_[head] * s;
      if (g.index_.contains(y.images())) continue;
      if (g.elements_.size() >= cap)
        throw CapExceeded("group '" + spec.name + "' has more than " + std::to_string(cap) + " elements");
      g.index_.emplace(y.images(), g.elements_.size());
      g.elements_.push_back(std::move(y));
    }
  }

  const auto n = g.elements_.size();
  g.table_.resize(n * n);
  g.inverse_.resize(n);
  g.orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.table_[a * n + b] = g.index_.at((g.elements_[a] * g.elements_[b]).images());
    g.inverse_[a] = g.index_.at(g.elements_[a].inverse().images());
    g.orders_[a] = g.elements_[a].order();
    g.exponent_ = std::lcm(g.exponent_, g.orders_[a]);
  }
  return g;
}

}  // namespace chardual
