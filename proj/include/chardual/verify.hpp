#pragma once

// Catalog-wide invariant suite behind `chardual verify`.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chardual/blocks.hpp"
#include "chardual/classfn.hpp"
#include "chardual/duality.hpp"
#include "chardual/group/commutators.hpp"
#include "chardual/group/spec_io.hpp"
#include "chardual/table/dixon.hpp"

namespace chardual {

struct CheckResult {
  std::string group;
  std::string check;
  bool passed = false;
  std::string detail;
};

/// Everything computed once per group and shared by the checks.
struct GroupContext {
  Group group;
  ConjugacyData cd;
  CharacterTable table;

  explicit GroupContext(const GroupSpec& spec) : group(enumerate(spec)), cd(conjugacy_data(group)), table(compute_table(group, cd)) {}
};

/// Frobenius: #{prod_{i<=n} [a_i, b_i] = g} = |G|^(2n-1) sum_chi chi(g) / chi(1)^(2n-1).
inline Cyclotomic frobenius_commutator_count(const CharacterTable& t, std::size_t cls, unsigned n) {
  Cyclotomic sum(t.exponent());
  for (const auto& chi : t.rows) sum += chi[cls] * make_rational(1, pow(chi.degree(), 2 * n - 1));
  return sum * Rational(pow(Integer(static_cast<unsigned long>(t.order())), 2 * n - 1));
}

namespace verify_detail {

using Check = std::function<std::string(const GroupContext&)>;  // empty string = pass

inline std::string class_invariants(const GroupContext& ctx) {
  const auto& cs = *ctx.cd.classes;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < cs.class_count(); ++i) {
    total += cs.sizes[i];
    if (cs.sizes[i] * ctx.cd.centralizer_orders[i] != cs.order) return "centralizer-orbit fails at class " + std::to_string(i);
    if (cs.power_map[i].size() != cs.exponent || cs.power_map[i][0] != 0 || (cs.exponent > 1 && cs.power_map[i][1] != i))
      return "power map inconsistent at class " + std::to_string(i);
    if (ctx.group.pow(ctx.cd.representatives[i], cs.exponent) != ctx.group.identity()) return "exponent does not kill class " + std::to_string(i);
    if (ctx.cd.real_flags[i] != cs.is_real(i)) return "real flag mismatch at class " + std::to_string(i);
  }
  if (total != cs.order) return "class sizes do not sum to |G|";
  if (cs.sizes[0] != 1 || ctx.cd.representatives[0] != ctx.group.identity()) return "class 0 is not the identity";
  return {};
}

inline std::string table_integrity(const GroupContext& ctx) {
  if (auto p = table_problems(ctx.table); !p.empty()) return p.front();
  const auto q = ctx.table.provenance.dixon_prime;
  auto other = compute_table(ctx.group, ctx.cd, dixon_prime(ctx.group.exponent(), ctx.group.order(), q));
  if (!(other == ctx.table)) return "table changes with the next Dixon prime";
  return {};
}

inline std::string identity_suite(const GroupContext& ctx) {
  const auto& t = ctx.table;
  const auto& cs = t.classes;
  auto pi = pi_character(cs);
  if (!(pi == pi_from_table(t))) return "pi differs from sum chi*conj(chi)";
  auto psi = psi_character(t);  // throws on a failed case split
  for (const auto& chi : t.rows) row_sums(ClassFunction(cs, chi));
  for (unsigned n = 0; n <= 3; ++n)
    for (unsigned m = 0; m <= 3; ++m)
      if (m >= 1 && !(pointwise(power(pi, n), power(psi, m)) == power(psi, n + m)))
        return "pi^" + std::to_string(n) + " psi^" + std::to_string(m) + " != psi^" + std::to_string(n + m);
  for (unsigned n = 1; n <= 5; ++n)
    for (const auto& chi : t.rows) {
      gamma(n, chi, t);  // dual-path and non-negativity asserted inside
      delta(n, chi, t);
    }
  for (unsigned n = 1; n <= 3; ++n) {
    auto acc = ClassFunction::constant(cs, 0);
    for (const auto& chi : t.rows) {
      ClassFunction f(cs, chi);
      f *= Rational(gamma(n, chi, t));
      acc += f;
    }
    if (!(acc == power(pi, n))) return "sum gamma_" + std::to_string(n) + "(phi) phi != pi^" + std::to_string(n);
  }
  return {};
}

inline std::string recovery_round_trip(const GroupContext& ctx) {
  const auto& cs = *ctx.cd.classes;
  const auto d = divisors(cs.order).size();
  for (bool real : {false, true}) {
    auto seq = trivial_multiplicities(ctx.table, d + 3, real);
    auto want = size_spectrum(cs, real);
    for (auto len = d; len <= d + 3; ++len) {
      std::vector<Integer> prefix(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(len));
      auto got = real ? recover_real_class_sizes(prefix, cs.order) : recover_class_sizes(prefix, cs.order);
      if (!(got == want))
        return std::string(real ? "real " : "") + "class sizes not recovered from " + std::to_string(len) + " terms";
    }
  }
  return {};
}

inline std::string defect_biconditional(const GroupContext& ctx) {
  for (auto p : prime_factors(ctx.group.order()))
    for (unsigned n : {2u, 3u})
      for (bool real : {false, true}) {
        auto r = defect_zero_by_characters(ctx.table, p, n, real);
        if (!r.agrees())
          return "p=" + std::to_string(p) + " n=" + std::to_string(n) + (real ? " real" : "") +
                 ": character side " + (r.character_side ? "true" : "false") + ", direct side " +
                 (r.direct_side ? "true" : "false");
      }
  return {};
}

inline std::string congruences(const GroupContext& ctx) {
  const auto& t = ctx.table;
  std::vector<Cyclotomic> values;
  for (const auto& chi : t.rows)
    for (const auto& z : chi.values)
      if (std::find(values.begin(), values.end(), z) == values.end()) values.push_back(z);

  for (auto p : prime_factors(ctx.group.order())) {
    auto maps = all_reductions(t.exponent(), p);
    const auto& map = maps.front();
    for (const auto& a : values)
      for (const auto& b : values)
        if (!(reduce_mod_M(a + b, map) == reduce_mod_M(a, map) + reduce_mod_M(b, map)) ||
            !(reduce_mod_M(a * b, map) == reduce_mod_M(a, map) * reduce_mod_M(b, map)))
          return "reduction mod M is not a homomorphism for p=" + std::to_string(p);

    std::vector<bool> pel;
    for (std::size_t c = 0; c < t.class_count(); ++c) pel.push_back(is_p_element(c, p, t, map));
    auto block = principal_block_members(t, p, map);
    if (map.m <= 12) {
      for (const auto& alt : maps) {
        for (std::size_t c = 0; c < t.class_count(); ++c)
          if (is_p_element(c, p, t, alt) != pel[c]) return "p-element verdict depends on the choice of M";
        if (principal_block_members(t, p, alt).members != block.members)
          return "principal block depends on the choice of M for p=" + std::to_string(p);
      }
    }
  }
  return {};
}

inline std::string frobenius_oracle(const GroupContext& ctx) {
  const auto order = ctx.group.order();
  if (order > kCommutatorCapSingle) return {};
  for (unsigned n : {1u, 2u}) {
    for (std::size_t c = 0; c < ctx.cd.class_count(); ++c) {
      auto brute = count_commutator_solutions(ctx.group, ctx.cd.representatives[c], static_cast<int>(n), kCommutatorCapSingle);
      auto formula = frobenius_commutator_count(ctx.table, c, n);
      if (!(formula == Cyclotomic::rational(ctx.table.exponent(), Rational(brute))))
        return "n=" + std::to_string(n) + " class " + std::to_string(c) + ": brute force " + std::to_string(brute) +
               " vs formula " + formula.str();
    }
  }
  return {};
}

inline std::string triple_sum_factorization(const GroupContext& ctx) {
  const auto& t = ctx.table;
  if (t.class_count() > kNaiveTripleSumClassCap) return {};
  for (auto p : prime_factors(ctx.group.order())) {
    auto block = principal_block_members(t, p).member_indices();
    for (std::size_t psi = 0; psi < t.rows.size(); ++psi)
      if (block_gamma(t, psi, block) != block_gamma_naive(t, psi, block))
        return "pi^3 factorization disagrees with the literal sum for p=" + std::to_string(p);
  }
  return {};
}

inline const std::vector<std::pair<std::string, Check>>& checks() {
  static const std::vector<std::pair<std::string, Check>> all = {
      {"class-invariants", class_invariants},
      {"table-integrity", table_integrity},
      {"identities", identity_suite},
      {"class-size-recovery", recovery_round_trip},
      {"defect-zero-biconditional", defect_biconditional},
      {"congruences", congruences},
      {"frobenius-oracle", frobenius_oracle},
      {"triple-sum-factorization", triple_sum_factorization},
  };
  return all;
}

}  // namespace verify_detail

/// Runs every check on every catalog group, in catalog order.
inline std::vector<CheckResult> verify_catalog(const std::vector<GroupSpec>& catalog) {
  std::vector<CheckResult> out;
  for (const auto& spec : catalog) {
    std::optional<GroupContext> ctx;
    try {
      ctx.emplace(spec);
    } catch (const std::exception& ex) {
      out.push_back({spec.name, "setup", false, ex.what()});
      continue;
    }
    for (const auto& [name, check] : verify_detail::checks()) {
      CheckResult r{spec.name, name, false, {}};
      try {
        r.detail = check(*ctx);
        r.passed = r.detail.empty();
      } catch (const std::exception& ex) {
        r.detail = ex.what();
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace chardual
