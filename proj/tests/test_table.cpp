#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "chardual/table/provider.hpp"
#include "support.hpp"

using namespace chardual;
using testing_support::context;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "chardual_table_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::vector<Cyclotomic> ints(std::uint64_t e, std::initializer_list<long> vs) {
  std::vector<Cyclotomic> out;
  for (auto v : vs) out.push_back(Cyclotomic::rational(e, v));
  return out;
}

// Fixed-point count minus one: irreducible for every 2-transitive action.
std::vector<Cyclotomic> deleted_permutation_character(const GroupContext& ctx) {
  std::vector<Cyclotomic> out;
  for (auto rep : ctx.cd.representatives) {
    const auto& perm = ctx.group.element(rep);
    long fixed = 0;
    for (Point x = 0; x < perm.degree(); ++x) fixed += perm(x) == x;
    out.push_back(Cyclotomic::rational(ctx.table.exponent(), fixed - 1));
  }
  return out;
}

bool has_row(const CharacterTable& t, const std::vector<Cyclotomic>& values) {
  for (const auto& chi : t.rows)
    if (chi.values == values) return true;
  return false;
}

std::vector<long> degrees(const CharacterTable& t) {
  std::vector<long> out;
  for (const auto& chi : t.rows) out.push_back(to_int64(chi.degree()));
  return out;
}

}  // namespace

TEST_CASE("Dixon prime selection", "[table][dixon]") {
  CHECK(dixon_prime(6, 6) == 7);
  CHECK(dixon_prime(30, 60) == 31);
  CHECK(dixon_prime(1, 1) == 3);
  CHECK(dixon_prime(6, 6, 7) == 13);
  for (const auto& s : testing_support::catalog()) {
    const auto& t = context(s.name).table;
    auto q = t.provenance.dixon_prime;
    CHECK(is_prime(q));
    CHECK((q - 1) % t.exponent() == 0);
    CHECK(q * q > 4 * t.order());
    CHECK(t.order() % q != 0);
  }
}

TEST_CASE("small tables by hand", "[table]") {
  SECTION("C2") {
    const auto& t = context("C2").table;
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].values == ints(2, {1, 1}));
    CHECK(t.rows[1].values == ints(2, {1, -1}));
  }

  SECTION("S3 in class order (1, 3-cycles, transpositions)") {
    const auto& t = context("S3").table;
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0].values == ints(6, {1, 1, 1}));
    CHECK(t.rows[1].values == ints(6, {1, 1, -1}));
    CHECK(t.rows[2].values == ints(6, {2, -1, 0}));
    CHECK(t.provenance.dixon_prime == 7);
  }

  SECTION("degrees of the larger catalog groups") {
    CHECK(degrees(context("A5").table) == std::vector<long>{1, 3, 3, 4, 5});
    CHECK(degrees(context("S4").table) == std::vector<long>{1, 1, 2, 3, 3});
    CHECK(degrees(context("S5").table) == std::vector<long>{1, 1, 4, 4, 5, 5, 6});
    CHECK(degrees(context("Q8").table) == std::vector<long>{1, 1, 1, 1, 2});
    CHECK(degrees(context("D12").table) == std::vector<long>{1, 1, 1, 1, 2, 2});
    CHECK(degrees(context("A4").table) == std::vector<long>{1, 1, 1, 3});
  }
}

TEST_CASE("cyclic groups: table is eps^(jk) on a generator's powers", "[table][oracle]") {
  for (const char* name : {"C2", "C3", "C4", "C5", "C6"}) {
    const auto& ctx = context(name);
    const auto& t = ctx.table;
    const auto n = t.order();
    Group::Element gen = 0;
    while (ctx.group.element_order(gen) != n) ++gen;
    for (std::uint64_t j = 0; j < n; ++j) {
      std::vector<Cyclotomic> row(t.class_count(), Cyclotomic(n));
      for (std::uint64_t k = 0; k < n; ++k)
        row[ctx.cd.class_of[ctx.group.pow(gen, k)]] = Cyclotomic::root_power(n, static_cast<std::int64_t>(j * k));
      INFO(name << " j=" << j);
      CHECK(has_row(t, row));
    }
  }
}

TEST_CASE("deleted permutation characters are rows", "[table][oracle]") {
  for (const char* name : {"S3", "A4", "S4", "A5", "S5"}) {
    const auto& ctx = context(name);
    INFO(name);
    CHECK(has_row(ctx.table, deleted_permutation_character(ctx)));
  }
}

TEST_CASE("catalog tables pass every structural check", "[table]") {
  for (const auto& s : testing_support::catalog()) {
    const auto& t = context(s.name).table;
    INFO(s.name);
    CHECK(verify_orthogonality(t).empty());
    CHECK(table_problems(t).empty());
    Integer sum_sq = 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      sum_sq += t.rows[r].degree() * t.rows[r].degree();
      CHECK(t.rows[r][0] == Cyclotomic::rational(t.exponent(), Rational(t.rows[r].degree())));
      for (const auto& z : t.rows[r].values) CHECK(z.has_integer_coefficients());
    }
    CHECK(sum_sq == static_cast<unsigned long>(t.order()));
    CHECK(is_trivial(t.rows[0]));
  }
}

TEST_CASE("table does not depend on the Dixon prime", "[table][dixon]") {
  for (const char* name : {"trivial", "C5", "S3", "Q8", "A4", "S4", "A5"}) {
    const auto& ctx = context(name);
    const auto q = ctx.table.provenance.dixon_prime;
    auto next = dixon_prime(ctx.table.exponent(), ctx.table.order(), q);
    auto again = compute_table(ctx.group, ctx.cd, next);
    INFO(name << " q=" << q << " next=" << next);
    CHECK(again.provenance.dixon_prime == next);
    CHECK(again == ctx.table);
  }
  const auto& s3 = context("S3");
  CHECK_THROWS_AS(compute_table(s3.group, s3.cd, 5), InvalidArgument);
  CHECK_THROWS_AS(compute_table(s3.group, s3.cd, 3), InvalidArgument);
}

TEST_CASE("table files", "[table][io]") {
  const auto& t = context("S3").table;

  SECTION("round trip") {
    auto path = scratch("s3.json").string();
    save_table(t, path);
    auto back = load_table(path);
    CHECK(back == t);
    CHECK(back.provenance.source == "file");
    CHECK(back.provenance.digest.size() == 16);
    CHECK(load_table(path).provenance.digest == back.provenance.digest);
  }

  SECTION("round trip with irrational values") {
    const auto& a5 = context("A5").table;
    auto path = scratch("a5.json").string();
    save_table(a5, path);
    CHECK(load_table(path) == a5);
  }

  SECTION("duplicated row is rejected by orthogonality") {
    auto j = to_json(t);
    j["rows"][2] = j["rows"][1];
    CHECK_THROWS_AS(table_from_json(j), TableError);
    CHECK_THROWS_WITH(table_from_json(j), Catch::Matchers::ContainsSubstring("orthogonality"));
  }

  SECTION("non-canonical cyclotomic") {
    auto j = to_json(t);
    j["rows"][0][0]["num"][0] = 2;
    j["rows"][0][0]["den"][0] = 2;
    CHECK_THROWS_WITH(table_from_json(j), Catch::Matchers::ContainsSubstring("non-canonical"));
    auto k = to_json(t);
    k["rows"][0][0]["num"].push_back(0);
    k["rows"][0][0]["den"].push_back(1);
    CHECK_THROWS_AS(table_from_json(k), TableError);
  }

  SECTION("schema violations") {
    auto j = to_json(t);
    j.erase("rows");
    CHECK_THROWS_AS(table_from_json(j), TableError);
    CHECK_THROWS_AS(load_table(scratch("missing.json").string()), TableError);
    std::ofstream(scratch("garbage.json")) << "{not json";
    CHECK_THROWS_AS(load_table(scratch("garbage.json").string()), TableError);
  }

  SECTION("file provider checks the class structure") {
    auto path = scratch("s3_provider.json").string();
    save_table(t, path);
    CHECK(FileTableProvider(path, context("S3").cd.classes).table() == t);
    CHECK_THROWS_AS(FileTableProvider(path, context("C6").cd.classes).table(), TableError);
  }
}

TEST_CASE("orthogonality violations are reported", "[table]") {
  auto t = context("S3").table;
  t.rows[2].values[0] = t.rows[2].values[0] * Rational(2);
  t.rows[2].values[1] = t.rows[2].values[1] * Rational(2);
  auto v = verify_orthogonality(t);
  REQUIRE_FALSE(v.empty());
  bool norm = false;
  for (const auto& x : v) norm = norm || (x.kind == OrthogonalityViolation::Kind::Row && x.first == 2 && x.second == 2);
  CHECK(norm);

  CHECK(verify_orthogonality(context("C4").table).empty());
  CHECK(verify_orthogonality(context("S3").table).empty());
}

TEST_CASE("row order normalization", "[table]") {
  auto t = context("D12").table;
  std::reverse(t.rows.begin(), t.rows.end());
  normalize_row_order(t);
  CHECK(t == context("D12").table);
}
