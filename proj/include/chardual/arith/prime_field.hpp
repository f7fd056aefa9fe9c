#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "chardual/arith/integers.hpp"

namespace chardual {

namespace modq {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t k, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  a %= q;
  while (k) {
    if (k & 1) r = mul(r, a, q);
    a = mul(a, a, q);
    k >>= 1;
  }
  return r;
}

/// Reduces a signed value into [0, q).
inline std::uint64_t reduce(std::int64_t a, std::uint64_t q) {
  auto r = a % static_cast<std::int64_t>(q);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(q) : r);
}

inline std::uint64_t reduce(const Integer& a, std::uint64_t q) {
  Integer r = a % Integer(static_cast<unsigned long>(q));
  if (r < 0) r += static_cast<unsigned long>(q);
  return r.get_ui();
}

/// Smallest generator of the multiplicative group of the prime field F_q.
inline std::uint64_t primitive_root(std::uint64_t q) {
  if (q == 2) return 1;
  auto factors = prime_factors(q - 1);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (auto r : factors) ok = ok && pow(g, (q - 1) / r, q) != 1;
    if (ok) return g;
  }
  throw InvalidArgument("no primitive root modulo " + std::to_string(q));
}

}  // namespace modq

/// Element of the prime field F_q. Operands must share the modulus.
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::uint64_t modulus, std::uint64_t value) : q_(modulus), v_(value % modulus) {}
  static PrimeFieldElement from_signed(std::uint64_t modulus, std::int64_t value) {
    return {modulus, modq::reduce(value, modulus)};
  }
  static PrimeFieldElement from_integer(std::uint64_t modulus, const Integer& value) {
    return {modulus, modq::reduce(value, modulus)};
  }

  std::uint64_t modulus() const { return q_; }
  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  /// Representative in (-q/2, q/2].
  std::int64_t symmetric() const {
    auto v = static_cast<std::int64_t>(v_);
    return 2 * v_ > q_ ? v - static_cast<std::int64_t>(q_) : v;
  }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const {
    check(o);
    auto s = v_ + o.v_;
    return {q_, s >= q_ ? s - q_ : s};
  }
  PrimeFieldElement operator-(const PrimeFieldElement& o) const {
    check(o);
    return {q_, v_ >= o.v_ ? v_ - o.v_ : v_ + q_ - o.v_};
  }
  PrimeFieldElement operator-() const { return {q_, v_ == 0 ? 0 : q_ - v_}; }
  PrimeFieldElement operator*(const PrimeFieldElement& o) const {
    check(o);
    return {q_, modq::mul(v_, o.v_, q_)};
  }
  PrimeFieldElement operator/(const PrimeFieldElement& o) const { return *this * o.inverse(); }
  PrimeFieldElement& operator+=(const PrimeFieldElement& o) { return *this = *this + o; }
  PrimeFieldElement& operator-=(const PrimeFieldElement& o) { return *this = *this - o; }
  PrimeFieldElement& operator*=(const PrimeFieldElement& o) { return *this = *this * o; }

  PrimeFieldElement pow(std::uint64_t k) const { return {q_, modq::pow(v_, k, q_)}; }

  PrimeFieldElement inverse() const {
    if (v_ == 0) throw InvalidArgument("inverse of zero in F_" + std::to_string(q_));
    return pow(q_ - 2);
  }

  bool operator==(const PrimeFieldElement& o) const { return q_ == o.q_ && v_ == o.v_; }

 private:
  void check(const PrimeFieldElement& o) const {
    if (q_ != o.q_) throw InvalidArgument("prime field modulus mismatch");
  }

  std::uint64_t q_;
  std::uint64_t v_;
};

inline std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x) {
  return os << x.value() << " (mod " << x.modulus() << ")";
}

}  // namespace chardual
