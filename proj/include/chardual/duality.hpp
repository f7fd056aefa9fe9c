#pragma once

// Class sizes from trivial-character multiplicities, and p-defect-0 classes
// from multiplicities mod p.
//
// With a_i classes of size i and C_i = |G|/i, the multiplicities satisfy
//   [1_G, pi^n] = sum_i a_i C_i^(n-1),
// a Vandermonde system in the a_i because the C_i are distinct. Only sizes
// dividing |G| can occur, so the unknowns range over the divisors of |G|.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chardual/arith/rational_solve.hpp"
#include "chardual/classfn.hpp"

namespace chardual {

/// size -> number of classes of that size (zero counts omitted).
struct SizeSpectrum {
  std::uint64_t order = 1;
  std::map<std::uint64_t, Integer> counts;

  Integer covered() const {
    Integer s = 0;
    for (const auto& [size, count] : counts) s += count * Integer(static_cast<unsigned long>(size));
    return s;
  }
  bool operator==(const SizeSpectrum&) const = default;
};

/// Class-size multiset of a class structure, optionally restricted to real classes.
inline SizeSpectrum size_spectrum(const ClassStructure& cs, bool real_only = false) {
  SizeSpectrum s;
  s.order = cs.order;
  for (std::size_t i = 0; i < cs.class_count(); ++i)
    if (!real_only || cs.is_real(i)) s.counts[cs.sizes[i]] += 1;
  return s;
}

namespace detail {

inline SizeSpectrum recover(const std::vector<Integer>& seq, std::uint64_t order, bool real) {
  if (order == 0) throw InvalidArgument("group order must be positive");
  const auto sizes = divisors(order);
  const auto d = sizes.size();
  if (seq.size() < d)
    throw InvalidArgument("recovery for order " + std::to_string(order) + " needs " + std::to_string(d) +
                          " multiplicities, got " + std::to_string(seq.size()));

  // Row n holds C_i^n for n = 0 .. len-1; row n pairs with seq[n] = [1_G, pi^(n+1)].
  auto coeff = [&](std::size_t n, std::size_t i) {
    return Rational(pow(Integer(static_cast<unsigned long>(order / sizes[i])), n));
  };
  RationalMatrix a(d, std::vector<Rational>(d));
  std::vector<Rational> b(d);
  for (std::size_t n = 0; n < d; ++n) {
    for (std::size_t i = 0; i < d; ++i) a[n][i] = coeff(n, i);
    b[n] = seq[n];
  }
  auto x = solve_exact(std::move(a), std::move(b));
  if (!x) throw IdentityViolation("Vandermonde system over distinct centralizer orders is singular");

  for (std::size_t n = d; n < seq.size(); ++n) {
    Rational lhs = 0;
    for (std::size_t i = 0; i < d; ++i) lhs += (*x)[i] * coeff(n, i);
    if (lhs != seq[n])
      throw InconsistentSequence("multiplicity " + std::to_string(n + 1) + " is " + seq[n].get_str() +
                                 " but the first " + std::to_string(d) + " terms predict " + to_string(lhs));
  }

  SizeSpectrum out;
  out.order = order;
  for (std::size_t i = 0; i < d; ++i) {
    const auto& ai = (*x)[i];
    if (!is_integer(ai) || ai < 0)
      throw InconsistentSequence("class count for size " + std::to_string(sizes[i]) + " would be " + to_string(ai));
    if (ai != 0) out.counts[sizes[i]] = ai.get_num();
  }
  const Integer total = out.covered();
  const Integer ord(static_cast<unsigned long>(order));
  if (real ? total > ord : total != ord)
    throw InconsistentSequence("recovered classes cover " + total.get_str() + " elements of a group of order " +
                               std::to_string(order));
  if (real && (out.counts.empty() || out.counts.begin()->first != 1))
    throw InconsistentSequence("recovered real classes miss the identity class");
  return out;
}

}  // namespace detail

/// Class sizes from ([1_G, pi], [1_G, pi^2], ...); needs d(|G|) terms and
/// verifies any further ones.
inline SizeSpectrum recover_class_sizes(const std::vector<Integer>& gamma_seq, std::uint64_t order) {
  return detail::recover(gamma_seq, order, false);
}

/// Real class sizes from ([1_G, psi], [1_G, psi^2], ...).
inline SizeSpectrum recover_real_class_sizes(const std::vector<Integer>& delta_seq, std::uint64_t order) {
  return detail::recover(delta_seq, order, true);
}

/// (gamma_1(1_G), ..., gamma_len(1_G)), or delta when real is set.
inline std::vector<Integer> trivial_multiplicities(const CharacterTable& t, std::size_t len, bool real) {
  auto one = trivial_class_function(t.classes);
  std::vector<Integer> out;
  for (unsigned n = 1; n <= len; ++n) out.push_back(real ? delta(n, one) : gamma(n, one));
  return out;
}

/// Classes with |K|_p = |G|_p.
inline std::vector<std::size_t> defect_zero_direct(const ClassStructure& cs, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  std::vector<std::size_t> out;
  const auto full = p_part(cs.order, p);
  for (std::size_t i = 0; i < cs.class_count(); ++i)
    if (p_part(cs.sizes[i], p) == full) out.push_back(i);
  return out;
}

struct DefectReport {
  std::uint64_t p = 2;
  unsigned n = 2;
  bool real = false;
  std::vector<Integer> multiplicities;   // gamma_n(phi) or delta_n(phi), one per row
  std::vector<std::uint64_t> residues;   // the same mod p
  std::vector<std::size_t> defect_zero;  // classes of p-defect 0 (real ones when real is set)
  bool character_side = false;           // some residue is nonzero
  bool direct_side = false;              // defect_zero is non-empty

  bool agrees() const { return character_side == direct_side; }
};

/// Multiplicities gamma_n(phi) (delta_n when real) for every row, any n >= 1.
inline std::vector<Integer> row_multiplicities(const CharacterTable& t, unsigned n, bool real) {
  std::vector<Integer> out;
  for (const auto& chi : t.rows) out.push_back(real ? delta(n, chi, t) : gamma(n, chi, t));
  return out;
}

namespace detail {

inline DefectReport defect_report(const CharacterTable& t, std::uint64_t p, unsigned n, bool real) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  DefectReport r;
  r.p = p;
  r.n = n;
  r.real = real;
  r.multiplicities = row_multiplicities(t, n, real);
  for (const auto& m : r.multiplicities) {
    Integer res = m % static_cast<unsigned long>(p);
    r.residues.push_back(res.get_ui());
    r.character_side = r.character_side || res != 0;
  }
  for (auto i : defect_zero_direct(*t.classes, p))
    if (!real || t.classes->is_real(i)) r.defect_zero.push_back(i);
  r.direct_side = !r.defect_zero.empty();
  return r;
}

}  // namespace detail

/// Both sides of the defect-0 criterion for n >= 2.
inline DefectReport defect_zero_by_characters(const CharacterTable& t, std::uint64_t p, unsigned n, bool real) {
  if (n < 2) throw InvalidArgument("the defect-0 criterion needs n >= 2");
  return detail::defect_report(t, p, n, real);
}

/// Same data for n = 1, where no equivalence is expected.
inline DefectReport defect_probe_n1(const CharacterTable& t, std::uint64_t p, bool real) {
  return detail::defect_report(t, p, 1, real);
}

}  // namespace chardual
