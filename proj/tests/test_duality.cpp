#include <catch_amalgamated.hpp>

#include <random>

#include "chardual/duality.hpp"
#include "support.hpp"

using namespace chardual;
using testing_support::context;

namespace {

std::vector<Integer> seq(std::initializer_list<long> vs) {
  std::vector<Integer> out;
  for (auto v : vs) out.emplace_back(v);
  return out;
}

SizeSpectrum spectrum(std::uint64_t order, std::map<std::uint64_t, long> counts) {
  SizeSpectrum s;
  s.order = order;
  for (auto [size, n] : counts) s.counts[size] = n;
  return s;
}

// [1_G, pi^n] = sum over classes of (|G|/|K|)^(n-1), from a size multiset.
std::vector<Integer> forward(const std::vector<std::uint64_t>& sizes, std::uint64_t order, std::size_t len) {
  std::vector<Integer> out;
  for (std::size_t n = 1; n <= len; ++n) {
    Integer s = 0;
    for (auto k : sizes) s += pow(Integer(static_cast<unsigned long>(order / k)), n - 1);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("class-size recovery examples", "[duality][recover]") {
  CHECK(recover_class_sizes(seq({3, 11, 49, 251}), 6) == spectrum(6, {{1, 1}, {2, 1}, {3, 1}}));
  CHECK(recover_class_sizes(seq({1}), 1) == spectrum(1, {{1, 1}}));
  CHECK(recover_class_sizes(seq({4, 16, 64}), 4) == spectrum(4, {{1, 4}}));

  CHECK(recover_real_class_sizes(seq({1, 3}), 3) == spectrum(3, {{1, 1}}));
  CHECK(recover_real_class_sizes(seq({3, 11, 49, 251}), 6) == spectrum(6, {{1, 1}, {2, 1}, {3, 1}}));
  CHECK(recover_real_class_sizes(seq({1}), 1) == spectrum(1, {{1, 1}}));
}

TEST_CASE("inconsistent sequences are rejected", "[duality][recover]") {
  CHECK_THROWS_AS(recover_class_sizes(seq({3, 11, 49}), 6), InvalidArgument);
  // surplus term disagrees
  CHECK_THROWS_AS(recover_class_sizes(seq({3, 11, 49, 251, 1000}), 6), InconsistentSequence);
  // fractional class count
  CHECK_THROWS_AS(recover_class_sizes(seq({3, 11, 50, 251}), 6), InconsistentSequence);
  // negative class count
  CHECK_THROWS_AS(recover_class_sizes(seq({0, 0, 0, 0}), 6), InconsistentSequence);
  // sizes do not add up to the order
  CHECK_THROWS_AS(recover_class_sizes(seq({2, 8, 32}), 4), InconsistentSequence);
  CHECK_NOTHROW(recover_real_class_sizes(seq({2, 8, 32}), 4));
}

TEST_CASE("recovery inverts the forward map on synthetic spectra", "[duality][recover][property]") {
  std::mt19937 rng(3);
  for (std::uint64_t order : {6u, 8u, 12u, 24u, 60u}) {
    const auto ds = divisors(order);
    for (int trial = 0; trial < 20; ++trial) {
      // random partition of order into divisor-sized blocks starting with the identity
      std::vector<std::uint64_t> sizes{1};
      std::uint64_t left = order - 1;
      while (left > 0) {
        std::vector<std::uint64_t> fit;
        for (auto d : ds)
          if (d <= left && d != order) fit.push_back(d);
        auto pick = fit[std::uniform_int_distribution<std::size_t>(0, fit.size() - 1)(rng)];
        sizes.push_back(pick);
        left -= pick;
      }
      SizeSpectrum want;
      want.order = order;
      for (auto s : sizes) want.counts[s] += 1;
      auto got = recover_class_sizes(forward(sizes, order, ds.size() + 2), order);
      INFO("order " << order);
      CHECK(got == want);
    }
  }
}

TEST_CASE("round trip on the catalog", "[duality][recover]") {
  for (const auto& s : testing_support::catalog()) {
    const auto& c = context(s.name);
    const auto d = divisors(c.table.order()).size();
    INFO(s.name);
    for (bool real : {false, true}) {
      auto full = trivial_multiplicities(c.table, d + 3, real);
      auto want = size_spectrum(*c.cd.classes, real);
      for (auto len = d; len <= d + 3; ++len) {
        std::vector<Integer> prefix(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(len));
        CHECK((real ? recover_real_class_sizes(prefix, c.table.order()) : recover_class_sizes(prefix, c.table.order())) == want);
      }
    }
  }
}

TEST_CASE("direct defect-zero classes", "[duality][defect]") {
  const auto& s3 = *context("S3").cd.classes;
  CHECK(defect_zero_direct(s3, 3) == std::vector<std::size_t>{2});
  CHECK(defect_zero_direct(s3, 2) == std::vector<std::size_t>{1});
  CHECK(defect_zero_direct(*context("C3").cd.classes, 3).empty());
  CHECK_THROWS_AS(defect_zero_direct(s3, 4), InvalidArgument);

  // centralizer order coprime to p, counted on elements
  for (const auto& s : testing_support::catalog()) {
    const auto& c = context(s.name);
    for (auto p : prime_factors(c.group.order())) {
      std::vector<std::size_t> want;
      for (std::size_t k = 0; k < c.cd.class_count(); ++k) {
        std::uint64_t cent = 0;
        auto x = c.cd.representatives[k];
        for (Group::Element y = 0; y < c.group.order(); ++y) cent += c.group.mul(x, y) == c.group.mul(y, x);
        if (cent % p != 0) want.push_back(k);
      }
      CHECK(defect_zero_direct(*c.cd.classes, p) == want);
    }
  }
}

TEST_CASE("defect-zero detection through characters", "[duality][defect]") {
  SECTION("S3, p = 3, n = 2") {
    auto r = defect_zero_by_characters(context("S3").table, 3, 2, false);
    CHECK(r.multiplicities == seq({11, 7, 9}));
    CHECK(r.residues == std::vector<std::uint64_t>{2, 1, 0});
    CHECK(r.character_side);
    CHECK(r.direct_side);
    CHECK(r.agrees());
    auto real = defect_zero_by_characters(context("S3").table, 3, 2, true);
    CHECK(real.character_side);
    CHECK(real.direct_side);
  }

  SECTION("C3, p = 3, n = 2") {
    const auto& t = context("C3").table;
    auto r = defect_zero_by_characters(t, 3, 2, false);
    for (auto res : r.residues) CHECK(res == 0);
    CHECK_FALSE(r.direct_side);
    CHECK(r.agrees());
    // gamma_2(phi) = 3 * (row sum of phi)
    CHECK(r.multiplicities == seq({9, 0, 0}));
  }

  SECTION("n below 2 is rejected, but the probe reports it") {
    CHECK_THROWS_AS(defect_zero_by_characters(context("S3").table, 3, 1, false), InvalidArgument);
    auto probe = defect_probe_n1(context("S3").table, 3, false);
    CHECK(probe.n == 1);
    CHECK(probe.multiplicities == seq({3, 1, 1}));
  }

  SECTION("biconditional across the catalog") {
    for (const auto& s : testing_support::catalog()) {
      const auto& t = context(s.name).table;
      for (auto p : prime_factors(t.order()))
        for (unsigned n : {2u, 3u})
          for (bool real : {false, true}) {
            auto r = defect_zero_by_characters(t, p, n, real);
            INFO(s.name << " p=" << p << " n=" << n << " real=" << real);
            CHECK(r.agrees());
          }
    }
  }
}
