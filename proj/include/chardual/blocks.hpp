#pragma once

// Congruences modulo a maximal ideal M over p in Z[eps_e].
//
// Z[eps_e]/M is GF(p^f) where m is the p-free part of e and f the order of p
// mod m; the reduction sends eps_e to a primitive m-th root of unity eta,
// which is a root of Phi_e mod p. Each admissible eta corresponds to one
// choice of M.

#include <cstdint>
#include <string>
#include <vector>

#include "chardual/arith/galois_field.hpp"
#include "chardual/classfn.hpp"
#include "chardual/duality.hpp"

namespace chardual {

struct ReductionMap {
  std::uint64_t e = 1;
  std::uint64_t p = 2;
  std::uint64_t m = 1;  // p-free part of e
  std::uint64_t f = 1;  // residue degree
  FieldPtr field;
  ExtensionFieldElement eta;  // image of eps_e
};

namespace detail {

inline ExtensionFieldElement eval_int_poly(const IntPolynomial& poly, const ExtensionFieldElement& x) {
  auto acc = ExtensionFieldElement::constant(x.field(), 0);
  for (auto i = poly.size(); i-- > 0;) acc = acc * x + ExtensionFieldElement::constant(x.field(), poly[i]);
  return acc;
}

inline std::vector<ReductionMap> reduction_maps(std::uint64_t e, std::uint64_t p, bool first_only) {
  if (e == 0) throw InvalidArgument("root-of-unity order must be positive");
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  ReductionMap base{e, p, p_free_part(e, p), 1, nullptr, ExtensionFieldElement::constant(GaloisField::make(p, 1), 1)};
  base.f = multiplicative_order(p % base.m, base.m);
  base.field = GaloisField::make(p, base.f);

  const auto& phi = cyclotomic_polynomial(e);
  const auto gen = smallest_generator(base.field);
  const auto n = base.field->size() - 1;
  std::vector<ReductionMap> out;
  auto x = gen;
  for (std::uint64_t k = 1; k <= n; ++k, x = x * gen) {
    if (x.multiplicative_order() != base.m || !eval_int_poly(phi, x).is_zero()) continue;
    auto map = base;
    map.eta = x;
    out.push_back(std::move(map));
    if (first_only) break;
  }
  if (out.empty()) throw IdentityViolation("no root of Phi_e of order m in the residue field");
  return out;
}

}  // namespace detail

/// Deterministic reduction: eta is the first power of the smallest
/// multiplicative generator that has exact order m and kills Phi_e.
inline ReductionMap build_reduction(std::uint64_t e, std::uint64_t p) { return detail::reduction_maps(e, p, true).front(); }

/// Every admissible eta, in the same scan order.
inline std::vector<ReductionMap> all_reductions(std::uint64_t e, std::uint64_t p) {
  return detail::reduction_maps(e, p, false);
}

/// Ring homomorphism Z[eps_e] -> Z[eps_e]/M; values of order dividing e are embedded first.
inline ExtensionFieldElement reduce_mod_M(const Cyclotomic& z, const ReductionMap& map) {
  const auto w = z.order() == map.e ? z : z.embed(map.e);
  if (!w.has_integer_coefficients()) throw NotIntegral("reduction mod M needs integer coefficients: " + w.str());
  auto acc = ExtensionFieldElement::constant(map.field, 0);
  auto power = ExtensionFieldElement::constant(map.field, 1);
  for (const auto& c : w.coefficients()) {
    acc += ExtensionFieldElement::constant(map.field, c.get_num()) * power;
    power *= map.eta;
  }
  return acc;
}

/// chi(g) = chi(1) mod M for every chi; checked against the order of g.
inline bool is_p_element(std::size_t cls, std::uint64_t p, const CharacterTable& t, const ReductionMap& map) {
  bool congruent = true;
  for (const auto& chi : t.rows) congruent = congruent && reduce_mod_M(chi[cls] - chi[0], map).is_zero();
  const bool direct = is_power_of(t.classes->rep_orders[cls], p);
  if (congruent != direct)
    throw IdentityViolation("class " + std::to_string(cls) + " of " + t.group() + ": congruence test says " +
                            (congruent ? "p-element" : "not a p-element") + " for p=" + std::to_string(p) +
                            " but the representative has order " + std::to_string(t.classes->rep_orders[cls]));
  return congruent;
}

/// omega_chi(K) = |K| chi(g_K) / chi(1); must be an algebraic integer.
inline Cyclotomic central_character(const Character& chi, std::size_t cls, const ClassStructure& cs) {
  auto w = chi[cls] * make_rational(Integer(static_cast<unsigned long>(cs.sizes[cls])), chi.degree());
  if (!w.has_integer_coefficients())
    throw NotIntegral("central character value " + w.str() + " at class " + std::to_string(cls) + " is not integral");
  return w;
}

struct BlockWitness {
  std::size_t character;
  std::size_t cls;
  std::string residue;  // omega_chi(K) - |K| mod M
};

struct BlockReport {
  std::uint64_t p = 2;
  std::vector<bool> members;
  std::vector<BlockWitness> witnesses;  // first failing class per non-member

  std::vector<std::size_t> member_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i]) out.push_back(i);
    return out;
  }
};

/// chi is in B_0 iff omega_chi(K) = |K| mod M for every class K.
inline BlockReport principal_block_members(const CharacterTable& t, std::uint64_t p, const ReductionMap& map) {
  BlockReport r;
  r.p = p;
  const auto& cs = *t.classes;
  for (std::size_t c = 0; c < t.rows.size(); ++c) {
    bool member = true;
    for (std::size_t k = 0; k < cs.class_count() && member; ++k) {
      auto diff = central_character(t.rows[c], k, cs) - Cyclotomic::rational(cs.exponent, Rational(cs.sizes[k]));
      auto res = reduce_mod_M(diff, map);
      if (!res.is_zero()) {
        member = false;
        r.witnesses.push_back({c, k, res.str()});
      }
    }
    r.members.push_back(member);
  }
  if (!r.members.at(0)) throw IdentityViolation("trivial character outside the principal block");
  return r;
}

inline BlockReport principal_block_members(const CharacterTable& t, std::uint64_t p) {
  return principal_block_members(t, p, build_reduction(t.exponent(), p));
}

/// sum over chi1, chi2, chi3 in Irr(G), phi in block of [psi, |chi1 chi2|^2 |chi3|^2 phi],
/// evaluated as [psi, pi^3 * sum_{phi in block} phi].
inline Integer block_gamma(const CharacterTable& t, std::size_t psi, const std::vector<std::size_t>& block) {
  if (block.empty()) throw InvalidArgument("block must contain at least one character");
  auto block_sum = ClassFunction::constant(t.classes, 0);
  for (auto b : block) block_sum += ClassFunction(t.classes, t.rows.at(b));
  auto value = inner(ClassFunction(t.classes, t.rows.at(psi)), pointwise(power(pi_character(t.classes), 3), block_sum));
  return value.as_rational_integer();
}

inline constexpr std::size_t kNaiveTripleSumClassCap = 5;

/// Literal quadruple sum over (chi1, chi2, chi3, phi); only for small tables.
inline Integer block_gamma_naive(const CharacterTable& t, std::size_t psi, const std::vector<std::size_t>& block,
                                           std::size_t class_cap = kNaiveTripleSumClassCap) {
  if (block.empty()) throw InvalidArgument("block must contain at least one character");
  if (t.class_count() > class_cap)
    throw CapExceeded("naive triple sum limited to " + std::to_string(class_cap) + " classes");
  const auto& cs = t.classes;
  std::vector<ClassFunction> abs_sq;  // |chi|^2
  for (const auto& chi : t.rows) {
    std::vector<Cyclotomic> v;
    for (const auto& z : chi.values) v.push_back(z * z.conjugate());
    abs_sq.emplace_back(cs, std::move(v));
  }
  const ClassFunction target(cs, t.rows.at(psi));
  Cyclotomic total(cs->exponent);
  for (std::size_t a = 0; a < t.rows.size(); ++a)
    for (std::size_t b = 0; b < t.rows.size(); ++b) {
      auto ab = pointwise(abs_sq[a], abs_sq[b]);  // |chi1 chi2|^2
      for (std::size_t c = 0; c < t.rows.size(); ++c) {
        auto abc = pointwise(ab, abs_sq[c]);
        for (auto phi : block) total += inner(target, pointwise(abc, ClassFunction(cs, t.rows.at(phi))));
      }
    }
  return total.as_rational_integer();
}

struct AltNormalizerEntry {
  std::size_t psi;
  Integer gamma;
  bool divisible_by_p_order_part;     // p * |G|_p
  bool divisible_by_p_block_sum;      // p * sum_{B0} phi(1)^2
  bool divisible_by_p_block_sum_part; // p * (sum_{B0} phi(1)^2)_p
};

struct AltNormalizerReport {
  std::uint64_t p = 2;
  std::uint64_t order_p_part = 1;
  std::vector<std::size_t> principal_block;
  Integer block_degree_square_sum;
  Integer block_degree_square_sum_p_part;
  std::vector<AltNormalizerEntry> entries;
  bool has_defect_zero_class = false;
  bool has_defect_zero_character = false;  // chi(1)_p = |G|_p

  /// Some gamma(psi) escapes divisibility by the chosen modulus.
  bool some_not_divisible_by_order_part() const { return any_fails(&AltNormalizerEntry::divisible_by_p_order_part); }
  bool some_not_divisible_by_block_sum() const { return any_fails(&AltNormalizerEntry::divisible_by_p_block_sum); }
  bool some_not_divisible_by_block_sum_part() const {
    return any_fails(&AltNormalizerEntry::divisible_by_p_block_sum_part);
  }

 private:
  bool any_fails(bool AltNormalizerEntry::*field) const {
    for (const auto& e : entries)
      if (!(e.*field)) return true;
    return false;
  }
};

/// gamma(psi) over the principal block against three candidate moduli.
/// Exploratory: nothing is asserted about the outcome.
inline AltNormalizerReport alt_normalizer_report(const CharacterTable& t, std::uint64_t p) {
  AltNormalizerReport r;
  r.p = p;
  r.order_p_part = p_part(t.order(), p);
  r.principal_block = principal_block_members(t, p).member_indices();
  r.block_degree_square_sum = 0;
  for (auto b : r.principal_block) r.block_degree_square_sum += t.rows[b].degree() * t.rows[b].degree();
  r.block_degree_square_sum_p_part = p_part(r.block_degree_square_sum, p);

  const Integer pp(static_cast<unsigned long>(p));
  const Integer by_order = pp * static_cast<unsigned long>(r.order_p_part);
  const Integer by_sum = pp * r.block_degree_square_sum;
  const Integer by_sum_part = pp * r.block_degree_square_sum_p_part;
  for (std::size_t psi = 0; psi < t.rows.size(); ++psi) {
    auto g = block_gamma(t, psi, r.principal_block);
    r.entries.push_back({psi, g, g % by_order == 0, g % by_sum == 0, g % by_sum_part == 0});
  }
  r.has_defect_zero_class = !defect_zero_direct(*t.classes, p).empty();
  for (const auto& chi : t.rows)
    r.has_defect_zero_character = r.has_defect_zero_character || p_part(chi.degree(), p) == r.order_p_part;
  return r;
}

}  // namespace chardual
