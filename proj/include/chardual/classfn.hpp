#pragma once

// Class functions over a fixed class structure: the conjugation character
// pi = sum chi * conj(chi), its real counterpart psi = sum chi^2, pointwise
// products and powers, the inner product, and the multiplicity sequences
//   gamma_n(phi) = [phi, pi^n],   delta_n(phi) = [phi, psi^n].
//
// gamma and delta are evaluated twice, once through the inner product and
// once as the weighted row sum sum_K (|G|/|K|)^(n-1) phi(g_K) (over real
// classes for delta); the two must agree.

#include <cstdint>
#include <utility>
#include <vector>

#include "chardual/table/character_table.hpp"

namespace chardual {

class ClassFunction {
 public:
  ClassFunction(ClassStructurePtr classes, std::vector<Cyclotomic> values)
      : classes_(std::move(classes)), values_(std::move(values)) {
    if (values_.size() != classes_->class_count()) throw ClassDataMismatch("class function has wrong length");
    for (const auto& v : values_)
      if (v.order() != classes_->exponent) throw OrderMismatch("class function value outside Q(eps_exponent)");
  }

  ClassFunction(ClassStructurePtr classes, const Character& chi) : ClassFunction(std::move(classes), chi.values) {}

  static ClassFunction constant(ClassStructurePtr classes, const Rational& c) {
    auto e = classes->exponent;
    auto k = classes->class_count();
    return {std::move(classes), std::vector<Cyclotomic>(k, Cyclotomic::rational(e, c))};
  }

  const ClassStructurePtr& classes() const { return classes_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  void check_compatible(const ClassFunction& o) const {
    if (classes_ != o.classes_ && !(*classes_ == *o.classes_))
      throw ClassDataMismatch("class functions belong to different class structures");
  }

  ClassFunction& operator+=(const ClassFunction& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  ClassFunction& operator*=(const Rational& r) {
    for (auto& v : values_) v *= r;
    return *this;
  }
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return (a.classes_ == b.classes_ || *a.classes_ == *b.classes_) && a.values_ == b.values_;
  }

 private:
  ClassStructurePtr classes_;
  std::vector<Cyclotomic> values_;
};

inline ClassFunction trivial_class_function(const ClassStructurePtr& cs) { return ClassFunction::constant(cs, 1); }

/// pi(g) = |C_G(g)|.
inline ClassFunction pi_character(const ClassStructurePtr& cs) {
  std::vector<Cyclotomic> v;
  for (std::size_t i = 0; i < cs->class_count(); ++i)
    v.push_back(Cyclotomic::rational(cs->exponent, Rational(cs->centralizer_order(i))));
  return {cs, std::move(v)};
}

inline ClassFunction pi_character(const ConjugacyData& cd) { return pi_character(cd.classes); }

/// psi from class data alone: |C_G(g)| on real classes, 0 elsewhere.
inline ClassFunction psi_from_classes(const ClassStructurePtr& cs) {
  std::vector<Cyclotomic> v;
  for (std::size_t i = 0; i < cs->class_count(); ++i)
    v.push_back(Cyclotomic::rational(cs->exponent, cs->is_real(i) ? Rational(cs->centralizer_order(i)) : Rational(0)));
  return {cs, std::move(v)};
}

/// sum_chi chi * conj(chi), evaluated from the table.
inline ClassFunction pi_from_table(const CharacterTable& t) {
  std::vector<Cyclotomic> v(t.class_count(), Cyclotomic(t.exponent()));
  for (const auto& chi : t.rows)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += chi[i] * chi[i].conjugate();
  return {t.classes, std::move(v)};
}

/// psi = sum_chi chi^2, checked against the real/non-real case split.
inline ClassFunction psi_character(const CharacterTable& t) {
  std::vector<Cyclotomic> v(t.class_count(), Cyclotomic(t.exponent()));
  for (const auto& chi : t.rows)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += chi[i] * chi[i];
  ClassFunction psi(t.classes, std::move(v));
  if (!(psi == psi_from_classes(t.classes)))
    throw IdentityViolation("sum of squared characters does not match the real-class case split for " + t.group());
  return psi;
}

inline ClassFunction pointwise(const ClassFunction& a, const ClassFunction& b) {
  a.check_compatible(b);
  std::vector<Cyclotomic> v;
  for (std::size_t i = 0; i < a.size(); ++i) v.push_back(a[i] * b[i]);
  return {a.classes(), std::move(v)};
}

/// Repeated pointwise multiplication; power(a, 0) is the all-ones function.
inline ClassFunction power(const ClassFunction& a, unsigned n) {
  auto out = ClassFunction::constant(a.classes(), 1);
  for (unsigned i = 0; i < n; ++i) out = pointwise(out, a);
  return out;
}

/// [phi, theta] = (1/|G|) sum_K |K| phi(g_K) conj(theta(g_K)).
inline Cyclotomic inner(const ClassFunction& phi, const ClassFunction& theta) {
  phi.check_compatible(theta);
  const auto& cs = *phi.classes();
  Cyclotomic sum(cs.exponent);
  for (std::size_t i = 0; i < phi.size(); ++i) sum += phi[i] * theta[i].conjugate() * Rational(cs.sizes[i]);
  return sum * make_rational(1, Integer(static_cast<unsigned long>(cs.order)));
}

namespace detail {

inline Integer multiplicity(const ClassFunction& phi, unsigned n, bool real) {
  if (n < 1) throw InvalidArgument("multiplicity index n must be >= 1");
  const auto& cs = phi.classes();
  auto base = real ? psi_from_classes(cs) : pi_character(cs);
  auto via_inner = inner(phi, power(base, n));

  Cyclotomic via_rows(cs->exponent);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (real && !cs->is_real(i)) continue;
    via_rows += phi[i] * Rational(pow(Integer(static_cast<unsigned long>(cs->centralizer_order(i))), n - 1));
  }
  if (via_inner != via_rows)
    throw IdentityViolation(std::string(real ? "delta" : "gamma") + "_" + std::to_string(n) +
                            ": inner product " + via_inner.str() + " differs from row sum " + via_rows.str());
  if (!via_inner.is_rational_integer() || via_inner.as_rational_integer() < 0)
    throw NotIntegral(std::string(real ? "delta" : "gamma") + "_" + std::to_string(n) +
                      " is not a non-negative integer: " + via_inner.str());
  return via_inner.as_rational_integer();
}

}  // namespace detail

/// gamma_n(phi) = [phi, pi^n].
inline Integer gamma(unsigned n, const ClassFunction& phi) { return detail::multiplicity(phi, n, false); }
inline Integer gamma(unsigned n, const Character& phi, const CharacterTable& t) {
  return gamma(n, ClassFunction(t.classes, phi));
}

/// delta_n(phi) = [phi, psi^n].
inline Integer delta(unsigned n, const ClassFunction& phi) { return detail::multiplicity(phi, n, true); }
inline Integer delta(unsigned n, const Character& phi, const CharacterTable& t) {
  return delta(n, ClassFunction(t.classes, phi));
}

/// (sum_K phi(g_K), sum over real K of phi(g_K)), checked against [phi, pi]
/// and [phi, psi].
inline std::pair<Integer, Integer> row_sums(const ClassFunction& phi) {
  const auto& cs = phi.classes();
  Cyclotomic all(cs->exponent), real(cs->exponent);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    all += phi[i];
    if (cs->is_real(i)) real += phi[i];
  }
  if (all != inner(phi, pi_character(cs)) || real != inner(phi, psi_from_classes(cs)))
    throw IdentityViolation("row sums differ from the multiplicities in pi and psi");
  return {all.as_rational_integer(), real.as_rational_integer()};
}

}  // namespace chardual
