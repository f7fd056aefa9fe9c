#include <catch_amalgamated.hpp>

#include "chardual/classfn.hpp"
#include "support.hpp"

using namespace chardual;
using testing_support::context;

namespace {

std::vector<Cyclotomic> ints(std::uint64_t e, std::initializer_list<long> vs) {
  std::vector<Cyclotomic> out;
  for (auto v : vs) out.push_back(Cyclotomic::rational(e, v));
  return out;
}

// [phi, theta] summed over group elements rather than classes.
Cyclotomic elementwise_inner(const GroupContext& ctx, const ClassFunction& phi, const ClassFunction& theta) {
  Cyclotomic sum(ctx.table.exponent());
  for (Group::Element x = 0; x < ctx.group.order(); ++x) {
    auto c = ctx.cd.class_of[x];
    sum += phi[c] * theta[c].conjugate();
  }
  return sum * make_rational(1, Integer(static_cast<unsigned long>(ctx.group.order())));
}

std::uint64_t commuting_count(const Group& g, Group::Element x) {
  std::uint64_t n = 0;
  for (Group::Element y = 0; y < g.order(); ++y) n += g.mul(x, y) == g.mul(y, x);
  return n;
}

bool conjugate_to_inverse(const Group& g, Group::Element x) {
  for (Group::Element y = 0; y < g.order(); ++y)
    if (g.conjugate(x, y) == g.inv(x)) return true;
  return false;
}

}  // namespace

TEST_CASE("pi", "[classfn]") {
  CHECK(pi_character(context("S3").cd).values() == ints(6, {6, 3, 2}));
  CHECK(pi_character(context("trivial").cd).values() == ints(1, {1}));
  CHECK(pi_character(context("C4").cd).values() == ints(4, {4, 4, 4, 4}));

  for (const auto& s : testing_support::catalog()) {
    const auto& ctx = context(s.name);
    INFO(s.name);
    auto pi = pi_character(ctx.cd);
    CHECK(pi == pi_from_table(ctx.table));
    for (std::size_t c = 0; c < ctx.cd.class_count(); ++c)
      CHECK(pi[c] == Cyclotomic::rational(ctx.table.exponent(), Rational(commuting_count(ctx.group, ctx.cd.representatives[c]))));
  }
}

TEST_CASE("psi", "[classfn]") {
  CHECK(psi_character(context("S3").table).values() == ints(6, {6, 3, 2}));
  CHECK(psi_character(context("C3").table).values() == ints(3, {3, 0, 0}));
  CHECK(psi_character(context("trivial").table).values() == ints(1, {1}));

  for (const auto& s : testing_support::catalog()) {
    const auto& ctx = context(s.name);
    INFO(s.name);
    auto psi = psi_character(ctx.table);
    for (std::size_t c = 0; c < ctx.cd.class_count(); ++c) {
      auto x = ctx.cd.representatives[c];
      long want = conjugate_to_inverse(ctx.group, x) ? static_cast<long>(commuting_count(ctx.group, x)) : 0;
      CHECK(psi[c] == Cyclotomic::rational(ctx.table.exponent(), want));
    }
  }

  SECTION("a corrupted table trips the case split") {
    auto t = context("C3").table;
    t.rows[1] = t.rows[2];
    CHECK_THROWS_AS(psi_character(t), IdentityViolation);
  }
}

TEST_CASE("pointwise products and powers", "[classfn]") {
  const auto& ctx = context("S3");
  auto pi = pi_character(ctx.cd);
  auto psi = psi_character(ctx.table);
  CHECK(power(pi, 0) == trivial_class_function(ctx.cd.classes));
  CHECK(power(pi, 3).values() == ints(6, {216, 27, 8}));
  CHECK(pointwise(power(pi, 1), power(psi, 1)) == power(psi, 2));

  CHECK_THROWS_AS(pointwise(pi, pi_character(context("C6").cd)), ClassDataMismatch);
  CHECK_THROWS_AS(ClassFunction(ctx.cd.classes, ints(6, {1, 2})), ClassDataMismatch);
  CHECK_THROWS_AS(ClassFunction(ctx.cd.classes, ints(3, {1, 2, 3})), OrderMismatch);

  for (const auto& s : testing_support::catalog()) {
    const auto& c = context(s.name);
    auto p = pi_character(c.cd);
    auto q = psi_character(c.table);
    for (unsigned n = 0; n <= 3; ++n)
      for (unsigned m = 0; m <= 3; ++m) {
        if (n + m == 0 || m == 0) continue;
        INFO(s.name << " n=" << n << " m=" << m);
        CHECK(pointwise(power(p, n), power(q, m)) == power(q, n + m));
      }
  }
}

TEST_CASE("inner product", "[classfn]") {
  const auto& ctx = context("S3");
  auto one = trivial_class_function(ctx.cd.classes);
  auto pi = pi_character(ctx.cd);
  CHECK(inner(one, one) == Cyclotomic::rational(6, 1));
  CHECK(inner(one, power(pi, 2)) == Cyclotomic::rational(6, 11));
  CHECK(inner(one, power(pi, 3)) == Cyclotomic::rational(6, 49));

  for (const char* name : {"C4", "Q8", "A4", "A5"}) {
    const auto& c = context(name);
    for (const auto& a : c.table.rows)
      for (const auto& b : c.table.rows) {
        ClassFunction fa(c.cd.classes, a), fb(c.cd.classes, b);
        CHECK(inner(fa, fb) == elementwise_inner(c, fa, fb));
      }
  }
}

TEST_CASE("gamma and delta", "[classfn]") {
  const auto& s3 = context("S3").table;
  const auto& one = s3.rows[0];
  const auto& sign = s3.rows[1];
  CHECK(gamma(1, one, s3) == 3);
  CHECK(gamma(2, one, s3) == 11);
  CHECK(gamma(2, sign, s3) == 7);
  for (unsigned n = 1; n <= 4; ++n) CHECK(delta(n, one, s3) == gamma(n, one, s3));

  CHECK(delta(2, context("C3").table.rows[0], context("C3").table) == 3);
  for (unsigned n = 1; n <= 6; ++n) CHECK(delta(n, context("trivial").table.rows[0], context("trivial").table) == 1);

  CHECK_THROWS_AS(gamma(0, one, s3), InvalidArgument);

  SECTION("gamma_n(1) equals the class-size display, and values are non-negative integers") {
    for (const auto& s : testing_support::catalog()) {
      const auto& c = context(s.name);
      const auto& cs = *c.cd.classes;
      INFO(s.name);
      for (unsigned n = 1; n <= 5; ++n) {
        Integer display = 0, real_display = 0;
        for (std::size_t k = 0; k < cs.class_count(); ++k) {
          auto term = pow(Integer(static_cast<unsigned long>(cs.order / cs.sizes[k])), n - 1);
          display += term;
          if (cs.is_real(k)) real_display += term;
        }
        CHECK(gamma(n, c.table.rows[0], c.table) == display);
        CHECK(delta(n, c.table.rows[0], c.table) == real_display);
        for (const auto& chi : c.table.rows) {
          CHECK(gamma(n, chi, c.table) >= 0);
          CHECK(delta(n, chi, c.table) >= 0);
        }
      }
    }
  }

  SECTION("pi^n is recovered from its decomposition") {
    for (const auto& s : testing_support::catalog()) {
      const auto& c = context(s.name);
      for (unsigned n = 1; n <= 3; ++n) {
        auto sum = ClassFunction::constant(c.cd.classes, 0);
        for (const auto& chi : c.table.rows) {
          ClassFunction f(c.cd.classes, chi);
          f *= Rational(gamma(n, chi, c.table));
          sum += f;
        }
        INFO(s.name << " n=" << n);
        CHECK(sum == power(pi_character(c.cd), n));
      }
    }
  }
}

TEST_CASE("row sums", "[classfn]") {
  const auto& s3 = context("S3");
  CHECK(row_sums(ClassFunction(s3.cd.classes, s3.table.rows[0])) == std::pair<Integer, Integer>{3, 3});
  CHECK(row_sums(ClassFunction(s3.cd.classes, s3.table.rows[2])) == std::pair<Integer, Integer>{1, 1});
  const auto& c3 = context("C3");
  CHECK(row_sums(ClassFunction(c3.cd.classes, c3.table.rows[1])) == std::pair<Integer, Integer>{0, 1});

  for (const auto& s : testing_support::catalog()) {
    const auto& c = context(s.name);
    for (const auto& chi : c.table.rows) {
      auto [all, real] = row_sums(ClassFunction(c.cd.classes, chi));
      CHECK(all == gamma(1, chi, c.table));
      CHECK(real == delta(1, chi, c.table));
    }
  }
}
