#pragma once

// Arbitrary-precision integer/rational aliases and the small number-theory
// helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "chardual/errors.hpp"

namespace chardual {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: gcd(num, den) = 1, den > 0

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& r) {
  return is_integer(r) ? r.get_num().get_str() : r.get_str();
}

inline Integer pow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 target expected");

inline bool fits_int64(const Integer& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

inline std::int64_t to_int64(const Integer& z) {
  if (!fits_int64(z)) throw InvalidArgument("integer " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Positive divisors in increasing order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t out = n;
  for (auto p : prime_factors(n)) out = out / p * (p - 1);
  return out;
}

/// Largest power of p dividing n (n > 0).
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

inline Integer p_part(Integer n, std::uint64_t p) {
  Integer out = 1;
  if (n < 0) n = -n;
  if (n == 0) throw InvalidArgument("p-part of zero");
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

/// n with every factor p removed.
inline std::uint64_t p_free_part(std::uint64_t n, std::uint64_t p) { return n / p_part(n, p); }

inline bool is_power_of(std::uint64_t n, std::uint64_t p) { return n >= 1 && p_part(n, p) == n; }

/// Multiplicative order of a modulo m, gcd(a, m) = 1; returns 1 for m = 1.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  if (std::gcd(a, m) != 1) throw InvalidArgument("multiplicative order of a non-unit");
  std::uint64_t x = a % m, k = 1;
  while (x != 1) {
    x = x * a % m;
    ++k;
  }
  return k;
}

}  // namespace chardual
