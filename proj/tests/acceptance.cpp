// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes within its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chardual/verify.hpp"

using namespace chardual;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<std::string()> body;  // empty string = pass
};

const std::vector<GroupSpec>& catalog() {
  static const auto specs = load_catalog(CHARDUAL_DEFAULT_CATALOG);
  return specs;
}

GroupContext s3() { return GroupContext(*find_group(catalog(), "S3")); }

std::string first_failure(const std::function<std::string(const GroupContext&)>& check) {
  for (const auto& spec : catalog()) {
    GroupContext ctx(spec);
    if (auto why = check(ctx); !why.empty()) return spec.name + ": " + why;
  }
  return {};
}

std::string s3_counterexample() {
  auto ctx = s3();
  auto block = principal_block_members(ctx.table, 3).member_indices();
  std::string values;
  for (std::size_t psi = 0; psi < ctx.table.rows.size(); ++psi) {
    auto g = block_gamma(ctx.table, psi, block);
    values += (values.empty() ? "" : ", ") + g.get_str();
    if (g % 9 != 0) return "gamma(psi_" + std::to_string(psi) + ") = " + g.get_str() + " is not divisible by 9";
  }
  if (ctx.table.rows.size() != 3) return "expected three characters";
  std::printf("    gamma = (%s), modulus 3*|G|_3 = 9\n", values.c_str());
  return {};
}

std::string s3_principal_block() {
  auto ctx = s3();
  auto members = principal_block_members(ctx.table, 3).member_indices();
  if (members != std::vector<std::size_t>{0, 1, 2}) return "principal 3-block is not all of Irr(S3)";
  return {};
}

std::string s3_defect_zero() {
  auto ctx = s3();
  const auto& cs = *ctx.cd.classes;
  auto direct = defect_zero_direct(cs, 3);
  if (direct.size() != 1) return "expected exactly one 3-defect-0 class";
  const auto cls = direct.front();
  if (ctx.group.element_order(ctx.cd.representatives[cls]) != 2 || cs.sizes[cls] != 3)
    return "the 3-defect-0 class is not the transposition class";
  auto r = defect_zero_by_characters(ctx.table, 3, 2, false);
  bool nonzero = false;
  for (auto res : r.residues) nonzero = nonzero || res != 0;
  if (!nonzero) return "every gamma_2(phi) is divisible by 3";
  if (r.multiplicities.front() != 11) return "gamma_2(1_G) = " + r.multiplicities.front().get_str() + ", expected 11";
  return {};
}

std::string p_element_congruence(const GroupContext& ctx) {
  for (auto p : prime_factors(ctx.group.order())) {
    auto map = build_reduction(ctx.table.exponent(), p);
    for (std::size_t c = 0; c < ctx.cd.class_count(); ++c) {
      bool direct = is_power_of(ctx.group.element_order(ctx.cd.representatives[c]), p);
      if (is_p_element(c, p, ctx.table, map) != direct)
        return "p=" + std::to_string(p) + " class " + std::to_string(c) + " disagrees with the order test";
    }
  }
  return {};
}

std::string oracle_cross_checks() {
  return first_failure([](const GroupContext& ctx) {
    if (auto why = verify_detail::frobenius_oracle(ctx); !why.empty()) return why;
    return p_element_congruence(ctx);
  });
}

std::string table_integrity() {
  return first_failure([](const GroupContext& ctx) {
    auto problems = table_problems(ctx.table);
    if (!problems.empty()) return problems.front();
    return verify_detail::table_integrity(ctx);
  });
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "S3 counterexample: gamma(psi) = 0 mod 9 over the principal 3-block", 1.0, s3_counterexample},
      {2, "S3 principal 3-block is all of Irr(S3)", 1.0, s3_principal_block},
      {3, "S3 transpositions are 3-defect 0 and gamma_2(1_G) = 11 is not 0 mod 3", 1.0, s3_defect_zero},
      {4, "class sizes and real class sizes recovered from gamma/delta sequences, full catalog", 120.0,
       [] { return first_failure(verify_detail::recovery_round_trip); }},
      {5, "defect-0 biconditional for every p | |G|, n in {2,3}, both real flags", 120.0,
       [] { return first_failure(verify_detail::defect_biconditional); }},
      {6, "character tables: orthogonality, sum of squares, integrality, prime independence", 180.0, table_integrity},
      {7, "identity suite: pi, psi split, row sums, pi^n psi^m = psi^(n+m), dual-path gamma/delta", 60.0,
       [] { return first_failure(verify_detail::identity_suite); }},
      {8, "Frobenius commutator counts (|G| <= 24, n <= 2) and p-element congruence vs order", 60.0,
       oracle_cross_checks},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    std::string why;
    try {
      why = c.body();
    } catch (const std::exception& ex) {
      why = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (why.empty() && secs > c.budget_seconds) why = "took longer than the time budget";
    const bool ok = why.empty();
    failed += !ok;
    std::printf("[%s] criterion %d: %s (%.3f s, budget %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                c.budget_seconds, ok ? "" : " -- ", why.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
