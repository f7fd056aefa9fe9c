#pragma once

// Finite fields GF(p^f) as F_p[x]/(g), with g the lexicographically smallest
// monic irreducible polynomial of degree f. Polynomials are enumerated by
// the index sum_i c_i p^i over their non-leading coefficients, so the constant
// term varies fastest.

#include <cstdint>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "chardual/arith/integers.hpp"
#include "chardual/arith/prime_field.hpp"

namespace chardual {

namespace detail {

using ModPoly = std::vector<std::uint64_t>;  // coefficient i multiplies x^i

inline void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo the monic polynomial m over F_p.
inline ModPoly poly_mod(ModPoly a, const ModPoly& m, std::uint64_t p) {
  trim(a);
  const auto dm = m.size() - 1;
  while (a.size() > dm) {
    auto c = a.back();
    auto shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = (a[shift + j] + (p - c) * m[j]) % p;
    trim(a);
  }
  return a;
}

/// Monic polynomial of degree d with non-leading coefficients given by the base-p digits of idx.
inline ModPoly monic_from_index(std::uint64_t idx, std::uint64_t d, std::uint64_t p) {
  ModPoly out(d + 1, 0);
  for (std::uint64_t i = 0; i < d; ++i, idx /= p) out[i] = idx % p;
  out[d] = 1;
  return out;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t k) {
  std::uint64_t r = 1;
  while (k--) r *= b;
  return r;
}

/// Irreducibility by trial division with every monic polynomial of degree <= deg/2.
inline bool is_irreducible(const ModPoly& g, std::uint64_t p) {
  const auto deg = g.size() - 1;
  for (std::uint64_t d = 1; 2 * d <= deg; ++d) {
    for (std::uint64_t idx = 0, n = ipow(p, d); idx < n; ++idx)
      if (poly_mod(g, monic_from_index(idx, d, p), p).empty()) return false;
  }
  return true;
}

}  // namespace detail

/// Description of GF(p^f). Immutable; elements share it through a shared_ptr.
class GaloisField {
 public:
  static std::shared_ptr<const GaloisField> make(std::uint64_t p, std::uint64_t f) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    if (f == 0) throw InvalidArgument("extension degree must be positive");
    for (std::uint64_t idx = 0, n = detail::ipow(p, f); idx < n; ++idx) {
      auto g = detail::monic_from_index(idx, f, p);
      if (detail::is_irreducible(g, p))
        return std::shared_ptr<const GaloisField>(new GaloisField(p, f, std::move(g)));
    }
    throw IdentityViolation("no irreducible polynomial found");
  }

  std::uint64_t characteristic() const { return p_; }
  std::uint64_t degree() const { return f_; }
  std::uint64_t size() const { return detail::ipow(p_, f_); }
  /// Defining polynomial, monic, low coefficient first.
  const detail::ModPoly& modulus() const { return g_; }

  bool operator==(const GaloisField& o) const { return p_ == o.p_ && f_ == o.f_ && g_ == o.g_; }

 private:
  GaloisField(std::uint64_t p, std::uint64_t f, detail::ModPoly g) : p_(p), f_(f), g_(std::move(g)) {}

  std::uint64_t p_, f_;
  detail::ModPoly g_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

class ExtensionFieldElement {
 public:
  ExtensionFieldElement(FieldPtr field, detail::ModPoly value) : field_(std::move(field)), v_(std::move(value)) {
    for (auto& c : v_) c %= field_->characteristic();
    v_ = detail::poly_mod(std::move(v_), field_->modulus(), field_->characteristic());
    v_.resize(field_->degree(), 0);
  }

  static ExtensionFieldElement constant(FieldPtr field, std::int64_t c) {
    auto p = field->characteristic();
    return {std::move(field), {modq::reduce(c, p)}};
  }

  static ExtensionFieldElement constant(FieldPtr field, const Integer& c) {
    auto p = field->characteristic();
    return {std::move(field), {modq::reduce(c, p)}};
  }

  /// Element whose coefficient vector has the base-p digits of idx; inverse of index().
  static ExtensionFieldElement from_index(FieldPtr field, std::uint64_t idx) {
    detail::ModPoly v(field->degree(), 0);
    for (auto& c : v) {
      c = idx % field->characteristic();
      idx /= field->characteristic();
    }
    return {std::move(field), std::move(v)};
  }

  const FieldPtr& field() const { return field_; }
  const detail::ModPoly& coefficients() const { return v_; }

  std::uint64_t index() const {
    std::uint64_t idx = 0;
    for (auto i = v_.size(); i-- > 0;) idx = idx * field_->characteristic() + v_[i];
    return idx;
  }

  bool is_zero() const {
    for (auto c : v_)
      if (c != 0) return false;
    return true;
  }
  bool is_one() const { return *this == constant(field_, 1); }

  ExtensionFieldElement operator+(const ExtensionFieldElement& o) const {
    check(o);
    auto v = v_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + o.v_[i]) % field_->characteristic();
    return {field_, std::move(v)};
  }
  ExtensionFieldElement operator-() const {
    auto p = field_->characteristic();
    auto v = v_;
    for (auto& c : v) c = (p - c) % p;
    return {field_, std::move(v)};
  }
  ExtensionFieldElement operator-(const ExtensionFieldElement& o) const { return *this + (-o); }
  ExtensionFieldElement operator*(const ExtensionFieldElement& o) const {
    check(o);
    auto p = field_->characteristic();
    detail::ModPoly prod(2 * v_.size(), 0);
    for (std::size_t i = 0; i < v_.size(); ++i)
      for (std::size_t j = 0; j < o.v_.size(); ++j) prod[i + j] = (prod[i + j] + v_[i] * o.v_[j]) % p;
    return {field_, std::move(prod)};
  }
  ExtensionFieldElement& operator+=(const ExtensionFieldElement& o) { return *this = *this + o; }
  ExtensionFieldElement& operator*=(const ExtensionFieldElement& o) { return *this = *this * o; }

  ExtensionFieldElement pow(std::uint64_t k) const {
    auto out = constant(field_, 1), base = *this;
    while (k) {
      if (k & 1) out *= base;
      base *= base;
      k >>= 1;
    }
    return out;
  }

  /// Multiplicative order; throws for zero.
  std::uint64_t multiplicative_order() const {
    if (is_zero()) throw InvalidArgument("zero has no multiplicative order");
    const auto n = field_->size() - 1;
    std::uint64_t ord = n;
    for (auto r : prime_factors(n))
      while (ord % r == 0 && pow(ord / r).is_one()) ord /= r;
    return ord;
  }

  bool operator==(const ExtensionFieldElement& o) const {
    return (field_ == o.field_ || *field_ == *o.field_) && v_ == o.v_;
  }

  std::string str() const {
    if (field_->degree() == 1) return std::to_string(v_[0]);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
    os << "]";
    return os.str();
  }

 private:
  void check(const ExtensionFieldElement& o) const {
    if (field_ != o.field_ && !(*field_ == *o.field_)) throw InvalidArgument("finite field mismatch");
  }

  FieldPtr field_;
  detail::ModPoly v_;
};

inline std::ostream& operator<<(std::ostream& os, const ExtensionFieldElement& x) { return os << x.str(); }

/// Smallest-index element generating the multiplicative group.
inline ExtensionFieldElement smallest_generator(const FieldPtr& field) {
  const auto n = field->size() - 1;
  for (std::uint64_t idx = 1; idx < field->size(); ++idx) {
    auto x = ExtensionFieldElement::from_index(field, idx);
    if (x.multiplicative_order() == n) return x;
  }
  throw IdentityViolation("finite field without a generator");
}

}  // namespace chardual
