#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "chardual/arith/integers.hpp"

namespace chardual {

/// Dense integer polynomial, coefficient i multiplies x^i.
using IntPolynomial = std::vector<std::int64_t>;

namespace detail {

/// Quotient of a by the monic polynomial b; the remainder must vanish.
inline IntPolynomial exact_divide_monic(IntPolynomial a, const IntPolynomial& b) {
  const auto db = b.size() - 1;
  if (a.size() < b.size()) throw IdentityViolation("exact division: dividend degree too small");
  IntPolynomial q(a.size() - db, 0);
  for (auto i = a.size(); i-- > db;) {
    auto c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw IdentityViolation("exact division left a remainder");
  return q;
}

}  // namespace detail

/// Phi_e, obtained from x^e - 1 by dividing out Phi_d for every proper divisor d.
inline const IntPolynomial& cyclotomic_polynomial(std::uint64_t e) {
  if (e == 0) throw InvalidArgument("cyclotomic polynomial of order 0");
  static std::mutex mu;
  static std::map<std::uint64_t, IntPolynomial> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(e); it != cache.end()) return it->second;
  }
  IntPolynomial poly(e + 1, 0);
  poly[0] = -1;
  poly[e] = 1;
  for (auto d : divisors(e))
    if (d != e) poly = detail::exact_divide_monic(std::move(poly), cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  return cache.emplace(e, std::move(poly)).first->second;
}

}  // namespace chardual
