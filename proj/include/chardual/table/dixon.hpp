#pragma once

// Dixon-Schneider character table computation.
//
// The class matrices M_i, (M_i)_{jl} = a_ijl, commute and act on the column
// vector of central characters w_l = |K_l| chi(g_l) / chi(1) by M_i w = w_i w.
// Over F_q, with q = 1 (mod e), q > 2 sqrt|G| and q coprime to |G|, their
// common eigenspaces are one-dimensional and the eigenvectors give the
// central characters mod q. Degrees follow from the first orthogonality
// relation and each value chi(g) is recovered from its reductions on the
// cyclic group <g> by a discrete Fourier transform with a fixed element of
// order e in F_q.

#include <cstdint>
#include <optional>
#include <vector>

#include "chardual/arith/prime_field.hpp"
#include "chardual/group/conjugacy.hpp"
#include "chardual/table/character_table.hpp"

namespace chardual {

/// Smallest prime q > after with q = 1 (mod e), q > 2 sqrt(order) and q not dividing order.
inline std::uint64_t dixon_prime(std::uint64_t e, std::uint64_t order, std::uint64_t after = 0) {
  if (e == 0 || order == 0) throw InvalidArgument("dixon_prime needs e >= 1 and order >= 1");
  for (std::uint64_t q = e + 1;; q += e) {
    if (q <= after || q * q <= 4 * order || order % q == 0 || !is_prime(q)) continue;
    return q;
  }
}

namespace detail {

using FqVector = std::vector<std::uint64_t>;
using FqMatrix = std::vector<FqVector>;  // row-major

/// Basis of {c : A c = 0} for an r x c matrix over F_q.
inline std::vector<FqVector> nullspace(FqMatrix a, std::size_t cols, std::uint64_t q) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[row]);
    auto inv = modq::pow(a[row][col], q - 2, q);
    for (auto& x : a[row]) x = modq::mul(x, inv, q);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      auto f = a[r][col];
      for (std::size_t c = 0; c < cols; ++c) a[r][c] = (a[r][c] + q - modq::mul(f, a[row][c], q)) % q;
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<FqVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FqVector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (q - a[r][free]) % q;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Subspace of F_q^k spanned by its basis vectors.
using Subspace = std::vector<FqVector>;

/// Eigenspace decomposition of the invariant subspace V under M. Returns V
/// itself when M acts on it as a scalar.
inline std::vector<Subspace> split(const Subspace& v, const FqMatrix& m, std::uint64_t q) {
  const auto k = m.size();
  const auto d = v.size();
  std::vector<FqVector> image(d, FqVector(k, 0));  // M b for each basis vector b
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t r = 0; r < k; ++r) {
      std::uint64_t s = 0;
      for (std::size_t c = 0; c < k; ++c) s = (s + modq::mul(m[r][c], v[b][c], q)) % q;
      image[b][r] = s;
    }

  std::vector<Subspace> parts;
  std::size_t found = 0;
  for (std::uint64_t lambda = 0; lambda < q && found < d; ++lambda) {
    // (M - lambda) V c = 0, as a k x d system in the coordinates c.
    FqMatrix sys(k, FqVector(d, 0));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t b = 0; b < d; ++b) sys[r][b] = (image[b][r] + q - modq::mul(lambda, v[b][r], q)) % q;
    auto coords = nullspace(std::move(sys), d, q);
    if (coords.empty()) continue;
    Subspace part;
    for (const auto& c : coords) {
      FqVector w(k, 0);
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t r = 0; r < k; ++r) w[r] = (w[r] + modq::mul(c[b], v[b][r], q)) % q;
      part.push_back(std::move(w));
    }
    found += part.size();
    parts.push_back(std::move(part));
  }
  if (found != d) throw IdentityViolation("class matrix is not diagonalizable over F_" + std::to_string(q));
  return parts;
}

}  // namespace detail

/// Exact irreducible character table of g; prime defaults to dixon_prime.
inline CharacterTable compute_table(const Group& g, const ConjugacyData& cd, std::optional<std::uint64_t> prime = {}) {
  const auto& cs = *cd.classes;
  const auto k = cs.class_count();
  const auto order = cs.order;
  const auto e = cs.exponent;
  const auto q = prime.value_or(dixon_prime(e, order));
  if (!is_prime(q) || (q - 1) % e != 0 || q * q <= 4 * order || order % q == 0)
    throw InvalidArgument(std::to_string(q) + " is not an admissible Dixon prime for this group");

  std::vector<detail::FqMatrix> mats(k, detail::FqMatrix(k, detail::FqVector(k, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto coeffs = class_mult_coefficients(g, cd, i, j);
      for (std::size_t l = 0; l < k; ++l) mats[i][j][l] = coeffs[l] % q;
    }

  std::vector<detail::Subspace> spaces;
  {
    detail::Subspace full;
    for (std::size_t i = 0; i < k; ++i) {
      detail::FqVector v(k, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  auto refine = [&](const detail::FqMatrix& m) {
    std::vector<detail::Subspace> next;
    for (auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      for (auto& part : detail::split(s, m, q)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  };
  auto all_split = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
  };

  for (std::size_t i = 1; i < k && !all_split(); ++i) refine(mats[i]);
  // Class matrices separate the characters whenever q does not divide |G|;
  // combinations sum_i t^i M_i are a deterministic fallback.
  for (std::uint64_t t = 1; t < q && !all_split(); ++t) {
    detail::FqMatrix m(k, detail::FqVector(k, 0));
    std::uint64_t coef = 1;
    for (std::size_t i = 0; i < k; ++i, coef = modq::mul(coef, t, q))
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) m[r][c] = (m[r][c] + modq::mul(coef, mats[i][r][c], q)) % q;
    refine(m);
  }
  if (!all_split() || spaces.size() != k) throw IdentityViolation("eigenspace splitting failed");

  const PrimeFieldElement one(q, 1);
  const auto z = PrimeFieldElement(q, modq::primitive_root(q)).pow((q - 1) / e);
  const auto e_inv = PrimeFieldElement(q, e % q).inverse();

  CharacterTable table;
  table.classes = cd.classes;
  table.provenance.source = "computed";
  table.provenance.dixon_prime = q;
  for (const auto& space : spaces) {
    const auto& vec = space.front();
    if (vec[0] == 0) throw IdentityViolation("eigenvector vanishes at the identity class");
    const auto scale = PrimeFieldElement(q, vec[0]).inverse();
    std::vector<PrimeFieldElement> omega;
    for (auto x : vec) omega.push_back(PrimeFieldElement(q, x) * scale);

    // |G| / chi(1)^2 = sum_i omega_i omega_{i*} / |K_i|
    PrimeFieldElement s(q, 0);
    for (std::size_t i = 0; i < k; ++i)
      s += omega[i] * omega[cs.inverse_class[i]] / PrimeFieldElement(q, cs.sizes[i] % q);
    const auto deg_sq = PrimeFieldElement(q, order % q) / s;
    std::uint64_t deg = 0;
    for (std::uint64_t x = 1; 2 * x < q; ++x)
      if (PrimeFieldElement(q, x).pow(2) == deg_sq) {
        deg = x;
        break;
      }
    if (deg == 0) throw IdentityViolation("no degree square root in (0, q/2)");

    std::vector<PrimeFieldElement> theta;
    for (std::size_t i = 0; i < k; ++i)
      theta.push_back(omega[i] * PrimeFieldElement(q, deg) / PrimeFieldElement(q, cs.sizes[i] % q));

    Character chi;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Rational> mult(e, Rational(0));
      std::uint64_t total = 0;
      for (std::uint64_t t = 0; t < e; ++t) {
        PrimeFieldElement m(q, 0);
        const auto zt_inv = z.pow(t).inverse();
        auto w = one;
        for (std::uint64_t s2 = 0; s2 < e; ++s2, w *= zt_inv) m += theta[cs.power_map[i][s2]] * w;
        m *= e_inv;
        if (m.value() > deg) throw IdentityViolation("eigenvalue multiplicity exceeds the degree");
        mult[t] = Rational(m.value());
        total += m.value();
      }
      if (total != deg) throw IdentityViolation("eigenvalue multiplicities do not sum to the degree");
      chi.values.push_back(Cyclotomic::from_exponents(e, mult));
    }
    table.rows.push_back(std::move(chi));
  }
  normalize_row_order(table);

  if (auto problems = table_problems(table); !problems.empty())
    throw IdentityViolation("computed table for " + cs.group + " fails: " + problems.front());
  return table;
}

}  // namespace chardual
