#pragma once

// Exact arithmetic in Q(eps_e), eps_e a primitive e-th root of unity.
//
// Values are kept in the power basis 1, eps, ..., eps^(phi(e)-1) and reduced
// modulo Phi_e after every operation, so two values are equal exactly when
// their coefficient vectors are equal. The ring of integers of Q(eps_e) is
// Z[eps_e], hence a value is an algebraic integer iff every coefficient is a
// rational integer.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "chardual/arith/cyclotomic_polynomial.hpp"
#include "chardual/arith/integers.hpp"

namespace chardual {

namespace detail {

/// Row j holds x^j mod Phi_e for 0 <= j < e.
using PowerTable = std::vector<std::vector<std::int64_t>>;

inline const PowerTable& power_table(std::uint64_t e) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::unique_ptr<PowerTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[e];
  if (slot) return *slot;

  const auto& phi = cyclotomic_polynomial(e);
  const auto deg = phi.size() - 1;
  auto table = std::make_unique<PowerTable>(e, std::vector<std::int64_t>(deg, 0));
  std::vector<std::int64_t> cur(deg, 0);
  cur[0] = 1;
  for (std::uint64_t j = 0; j < e; ++j) {
    (*table)[j] = cur;
    // cur <- x * cur mod Phi_e
    auto top = cur[deg - 1];
    for (auto i = deg - 1; i > 0; --i) cur[i] = cur[i - 1] - top * phi[i];
    cur[0] = -top * phi[0];
  }
  slot = std::move(table);
  return *slot;
}

}  // namespace detail

class Cyclotomic {
 public:
  /// Zero of Q(eps_e).
  explicit Cyclotomic(std::uint64_t e = 1)
      : e_(check_order(e)), c_(cyclotomic_polynomial(e).size() - 1, Rational(0)) {}

  static Cyclotomic rational(std::uint64_t e, const Rational& r) {
    Cyclotomic z(e);
    z.c_[0] = r;
    return z;
  }

  /// Builds from canonical power-basis coefficients; length must be phi(e).
  static Cyclotomic from_coefficients(std::uint64_t e, std::vector<Rational> coeffs) {
    Cyclotomic z(e);
    if (coeffs.size() != z.c_.size())
      throw InvalidArgument("cyclotomic of order " + std::to_string(e) + " needs " +
                            std::to_string(z.c_.size()) + " coefficients, got " +
                            std::to_string(coeffs.size()));
    for (auto& c : coeffs) c.canonicalize();
    z.c_ = std::move(coeffs);
    return z;
  }

  /// Reduces sum_j raw[j] eps^j; exponents are taken modulo e.
  static Cyclotomic from_exponents(std::uint64_t e, const std::vector<Rational>& raw) {
    Cyclotomic z(e);
    const auto& table = detail::power_table(e);
    for (std::size_t j = 0; j < raw.size(); ++j) {
      if (raw[j] == 0) continue;
      const auto& row = table[j % e];
      for (std::size_t t = 0; t < row.size(); ++t)
        if (row[t] != 0) z.c_[t] += raw[j] * row[t];
    }
    return z;
  }

  /// eps_e^j in canonical form.
  static Cyclotomic root_power(std::uint64_t e, std::int64_t j) {
    check_order(e);
    auto idx = static_cast<std::uint64_t>(((j % static_cast<std::int64_t>(e)) + static_cast<std::int64_t>(e)) %
                                          static_cast<std::int64_t>(e));
    Cyclotomic z(e);
    const auto& row = detail::power_table(e)[idx];
    for (std::size_t t = 0; t < row.size(); ++t) z.c_[t] = row[t];
    return z;
  }

  std::uint64_t order() const { return e_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
  }
  bool is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return r == 0; });
  }
  bool is_rational_integer() const { return is_rational() && is_integer(c_[0]); }
  bool has_integer_coefficients() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return is_integer(r); });
  }

  /// Value of a rational Cyclotomic; throws NotIntegral otherwise.
  Rational as_rational() const {
    if (!is_rational()) throw NotIntegral("not a rational number: " + str());
    return c_[0];
  }

  Integer as_rational_integer() const {
    if (!is_rational_integer()) throw NotIntegral("not a rational integer: " + str());
    return c_[0].get_num();
  }

  /// Image in Q(eps_f) for a multiple f of e, via eps_e = eps_f^(f/e).
  Cyclotomic embed(std::uint64_t f) const {
    if (f == 0 || f % e_ != 0)
      throw OrderMismatch("cannot embed order " + std::to_string(e_) + " into " + std::to_string(f));
    if (f == e_) return *this;
    std::vector<Rational> raw(f, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) raw[i * (f / e_)] = c_[i];
    return from_exponents(f, raw);
  }

  /// Galois automorphism eps -> eps^k, gcd(k, e) = 1.
  Cyclotomic galois(std::int64_t k) const {
    auto ee = static_cast<std::int64_t>(e_);
    auto kk = ((k % ee) + ee) % ee;
    if (std::gcd(static_cast<std::uint64_t>(kk), e_) != 1 && e_ != 1)
      throw InvalidArgument("Galois exponent must be coprime to the order");
    if (is_rational()) return *this;
    std::vector<Rational> raw(e_, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      raw[static_cast<std::uint64_t>(kk) * i % e_] += c_[i];
    return from_exponents(e_, raw);
  }

  /// Complex conjugation, eps -> eps^-1.
  Cyclotomic conjugate() const { return galois(-1); }

  Cyclotomic operator-() const {
    Cyclotomic z(*this);
    for (auto& c : z.c_) c = -c;
    return z;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Cyclotomic& operator*=(const Rational& r) {
    for (auto& c : c_) c *= r;
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) {
    check_same(o);
    if (o.is_rational()) return *this *= o.c_[0];
    if (is_rational()) {
      Rational r = c_[0];
      *this = o;
      return *this *= r;
    }
    std::vector<Rational> raw(2 * c_.size(), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        if (o.c_[j] != 0) raw[i + j] += c_[i] * o.c_[j];
    }
    return *this = from_exponents(e_, raw);
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }

  Cyclotomic pow(unsigned n) const {
    Cyclotomic out = rational(e_, 1), base = *this;
    while (n) {
      if (n & 1) out *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return out;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.e_ == b.e_ && a.c_ == b.c_; }

  /// Lexicographic order on (e, coefficients), coefficient 0 first.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
    if (auto c = a.e_ <=> b.e_; c != 0) return c;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] < b.c_[i]) return std::strong_ordering::less;
      if (b.c_[i] < a.c_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  /// Human form, e.g. "2 - 3*E(6)^2".
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Rational c = c_[i];
      if (!first) {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      }
      first = false;
      if (i == 0) {
        os << to_string(c);
      } else {
        if (c == -1) os << "-";
        else if (c != 1) os << to_string(c) << "*";
        os << "E(" << e_ << ")";
        if (i > 1) os << "^" << i;
      }
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  static std::uint64_t check_order(std::uint64_t e) {
    if (e == 0) throw InvalidArgument("root-of-unity order must be positive");
    return e;
  }

  void check_same(const Cyclotomic& o) const {
    if (e_ != o.e_)
      throw OrderMismatch("cyclotomic orders differ: " + std::to_string(e_) + " vs " + std::to_string(o.e_));
  }

  std::uint64_t e_;
  std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) { return os << z.str(); }

}  // namespace chardual
