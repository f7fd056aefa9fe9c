#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "chardual/errors.hpp"

namespace chardual {

using Point = std::uint32_t;

/// Bijection on {0, ..., d-1}; cycle notation uses 1-based points.
///
/// Products act on the right, as in GAP: (a * b)(x) = b(a(x)).
class Permutation {
 public:
  explicit Permutation(std::size_t degree = 0) : img_(degree) { std::iota(img_.begin(), img_.end(), Point{0}); }

  explicit Permutation(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto x : img_) {
      if (x >= img_.size() || seen[x]) throw InvalidArgument("image list is not a permutation");
      seen[x] = true;
    }
  }

  std::size_t degree() const { return img_.size(); }
  const std::vector<Point>& images() const { return img_; }
  Point operator()(Point x) const { return img_[x]; }

  bool is_identity() const {
    for (Point i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Permutation operator*(const Permutation& o) const {
    if (o.degree() != degree()) throw InvalidArgument("permutation degrees differ");
    Permutation out(degree());
    for (Point i = 0; i < img_.size(); ++i) out.img_[i] = o.img_[img_[i]];
    return out;
  }

  Permutation inverse() const {
    Permutation out(degree());
    for (Point i = 0; i < img_.size(); ++i) out.img_[img_[i]] = i;
    return out;
  }

  /// Order as the lcm of cycle lengths.
  std::uint64_t order() const {
    std::uint64_t ord = 1;
    std::vector<bool> seen(img_.size(), false);
    for (Point i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (Point x = i; !seen[x]; x = img_[x], ++len) seen[x] = true;
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  /// Disjoint cycle notation, 1-based, fixed points omitted; "()" for the identity.
  std::string cycles() const {
    std::string out;
    std::vector<bool> seen(img_.size(), false);
    for (Point i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      out += '(';
      for (Point x = i; !seen[x]; x = img_[x]) {
        seen[x] = true;
        if (x != i) out += ' ';
        out += std::to_string(x + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<Point> img_;
};

/// Parses disjoint cycles such as "(1 2 3)(4 5)" (commas also separate points).
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);

  auto fail = [&](const std::string& why) {
    throw ParseError("cycle notation '" + std::string(text) + "': " + why);
  };

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  if (i == text.size()) fail("empty");
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        if (cycle.empty()) fail("leading comma");
        ++i;
        skip_ws();
      }
      if (i == text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail(std::string("unexpected character '") + text[i] + "'");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > degree) fail("point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
        ++i;
      }
      if (v == 0) fail("point 0 out of range 1.." + std::to_string(degree));
      auto pt = static_cast<Point>(v - 1);
      if (used[pt]) fail("repeated point " + std::to_string(v));
      used[pt] = true;
      cycle.push_back(pt);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(img));
}

}  // namespace chardual
