#pragma once

// Report JSON: { "command", "group", "inputs", "results", "verdicts" }.
// inputs always carries the group order and the table provenance.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chardual/blocks.hpp"
#include "chardual/duality.hpp"
#include "chardual/table/table_io.hpp"
#include "chardual/verify.hpp"

namespace chardual {

inline json integer_json(const Integer& z) {
  if (fits_int64(z)) return to_int64(z);
  return z.get_str();
}

inline json integers_json(const std::vector<Integer>& zs) {
  json out = json::array();
  for (const auto& z : zs) out.push_back(integer_json(z));
  return out;
}

inline json provenance_json(const TableProvenance& p) {
  if (p.source == "file") return {{"source", "file"}, {"path", p.path}, {"digest", p.digest}};
  return {{"source", "computed"}, {"dixon_prime", p.dixon_prime}};
}

inline json make_report(const std::string& command, const std::string& group, std::uint64_t order, json inputs = json::object()) {
  inputs["order"] = order;
  return {{"command", command}, {"group", group}, {"inputs", std::move(inputs)}, {"results", json::object()},
          {"verdicts", json::object()}};
}

inline json make_report(const std::string& command, const CharacterTable& t, json inputs = json::object()) {
  inputs["table"] = provenance_json(t.provenance);
  return make_report(command, t.group(), t.order(), std::move(inputs));
}

inline json spectrum_json(const SizeSpectrum& s) {
  json out = json::object();
  for (const auto& [size, count] : s.counts) out[std::to_string(size)] = integer_json(count);
  return out;
}

inline json classes_report(const Group& g, const ConjugacyData& cd) {
  auto r = make_report("classes", g.name(), g.order(), {{"exponent", g.exponent()}});
  const auto& cs = *cd.classes;
  json reps = json::array();
  for (auto x : cd.representatives) reps.push_back(g.element(x).cycles());
  r["results"] = {{"sizes", cs.sizes},
                  {"centralizers", cd.centralizer_orders},
                  {"representatives", reps},
                  {"rep_orders", cs.rep_orders},
                  {"inverse_class", cs.inverse_class},
                  {"real", cd.real_flags},
                  {"real_classes", real_classes(cd)}};
  return r;
}

inline json table_report(const CharacterTable& t) {
  auto r = make_report("table", t);
  json rows = json::array();
  for (const auto& chi : t.rows) {
    json row = json::array();
    for (const auto& z : chi.values) row.push_back(z.str());
    rows.push_back(std::move(row));
  }
  std::vector<Integer> degrees;
  for (const auto& chi : t.rows) degrees.push_back(chi.degree());
  r["results"] = {{"class_sizes", t.classes->sizes}, {"degrees", integers_json(degrees)}, {"rows", rows}};
  r["verdicts"] = {{"valid", table_problems(t).empty()}};
  return r;
}

inline json gamma_report(const CharacterTable& t, unsigned nmax, bool real) {
  auto r = make_report("gamma", t, {{"nmax", nmax}, {"real", real}});
  json by_n = json::array();
  for (unsigned n = 1; n <= nmax; ++n) by_n.push_back(integers_json(row_multiplicities(t, n, real)));
  r["results"] = {{real ? "delta" : "gamma", by_n}};
  json sums = json::array();
  for (const auto& chi : t.rows) {
    auto [all, re] = row_sums(ClassFunction(t.classes, chi));
    sums.push_back({integer_json(all), integer_json(re)});
  }
  r["results"]["row_sums"] = sums;
  return r;
}

inline json recover_report(const CharacterTable& t, std::size_t len, bool real) {
  auto r = make_report("recover", t, {{"terms", len}, {"real", real}});
  auto seq = trivial_multiplicities(t, len, real);
  auto got = real ? recover_real_class_sizes(seq, t.order()) : recover_class_sizes(seq, t.order());
  auto want = size_spectrum(*t.classes, real);
  r["results"] = {{"sequence", integers_json(seq)}, {"recovered", spectrum_json(got)}, {"direct", spectrum_json(want)}};
  r["verdicts"] = {{"match", got == want}};
  return r;
}

inline json defect_report_json(const CharacterTable& t, const DefectReport& d) {
  auto r = make_report("defect", t, {{"p", d.p}, {"n", d.n}, {"real", d.real}});
  r["results"] = {{"multiplicities", integers_json(d.multiplicities)},
                  {"residues", d.residues},
                  {"defect_zero_classes", d.defect_zero}};
  r["verdicts"] = {{"character_side", d.character_side}, {"direct_side", d.direct_side}};
  if (d.n >= 2) r["verdicts"]["agree"] = d.agrees();
  return r;
}

inline json pelements_report(const CharacterTable& t, std::uint64_t p, const ReductionMap& map) {
  auto r = make_report("pelements", t, {{"p", p}, {"residue_degree", map.f}, {"eta", map.eta.str()}});
  json flags = json::array();
  for (std::size_t c = 0; c < t.class_count(); ++c) flags.push_back(is_p_element(c, p, t, map));
  r["results"] = {{"p_element", flags}, {"rep_orders", t.classes->rep_orders}};
  r["verdicts"] = {{"congruence_matches_order", true}};
  return r;
}

inline json blocks_report(const CharacterTable& t, const BlockReport& b, const ReductionMap& map) {
  auto r = make_report("blocks", t, {{"p", b.p}, {"residue_degree", map.f}, {"eta", map.eta.str()}});
  json witnesses = json::array();
  for (const auto& w : b.witnesses) witnesses.push_back({{"character", w.character}, {"class", w.cls}, {"residue", w.residue}});
  r["results"] = {{"members", b.member_indices()}, {"witnesses", witnesses}};
  r["verdicts"] = {{"trivial_in_block", b.members.at(0)},
                   {"all_characters", b.member_indices().size() == t.rows.size()}};
  return r;
}

inline json counterexample_report(const CharacterTable& t, std::uint64_t p, const std::vector<std::size_t>& block) {
  auto r = make_report("counterexample", t, {{"p", p}, {"block", block}});
  std::vector<Integer> values;
  for (std::size_t psi = 0; psi < t.rows.size(); ++psi) values.push_back(block_gamma(t, psi, block));
  const Integer modulus = Integer(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p_part(t.order(), p));
  bool all_div = true;
  for (const auto& v : values) all_div = all_div && v % modulus == 0;
  r["results"] = {{"gamma", integers_json(values)}, {"modulus", integer_json(modulus)},
                  {"defect_zero_classes", defect_zero_direct(*t.classes, p)}};
  r["verdicts"] = {{"all_divisible", all_div}};
  return r;
}

inline json alt_normalizer_json(const CharacterTable& t, const AltNormalizerReport& a) {
  auto r = make_report("counterexample", t, {{"p", a.p}, {"alt_normalizer", true}});
  json entries = json::array();
  for (const auto& e : a.entries)
    entries.push_back({{"psi", e.psi},
                       {"gamma", integer_json(e.gamma)},
                       {"div_p_order_part", e.divisible_by_p_order_part},
                       {"div_p_block_sum", e.divisible_by_p_block_sum},
                       {"div_p_block_sum_part", e.divisible_by_p_block_sum_part}});
  r["results"] = {{"order_p_part", a.order_p_part},
                  {"principal_block", a.principal_block},
                  {"block_degree_square_sum", integer_json(a.block_degree_square_sum)},
                  {"block_degree_square_sum_p_part", integer_json(a.block_degree_square_sum_p_part)},
                  {"entries", entries}};
  r["verdicts"] = {{"has_defect_zero_class", a.has_defect_zero_class},
                   {"has_defect_zero_character", a.has_defect_zero_character},
                   {"some_not_divisible_by_p_order_part", a.some_not_divisible_by_order_part()},
                   {"some_not_divisible_by_p_block_sum", a.some_not_divisible_by_block_sum()},
                   {"some_not_divisible_by_p_block_sum_part", a.some_not_divisible_by_block_sum_part()}};
  return r;
}

inline json verify_report(const std::vector<CheckResult>& results) {
  auto r = make_report("verify", "catalog", 0);
  r["inputs"].erase("order");
  json rows = json::array();
  std::size_t failed = 0;
  for (const auto& c : results) {
    rows.push_back({{"group", c.group}, {"check", c.check}, {"passed", c.passed}, {"detail", c.detail}});
    failed += !c.passed;
  }
  r["results"] = {{"checks", rows}};
  r["verdicts"] = {{"all_passed", failed == 0}, {"failed", failed}, {"total", results.size()}};
  return r;
}

/// Plain-text rendering of any report.
inline std::string render_human(const json& report) {
  std::ostringstream os;
  os << report.value("command", "") << ": " << report.value("group", "") << "\n";
  auto dump_section = [&](const char* title, const json& obj) {
    if (!obj.is_object() || obj.empty()) return;
    os << title << "\n";
    for (const auto& [key, val] : obj.items()) {
      if (val.is_array() && !val.empty() && (val.front().is_array() || val.front().is_object())) {
        os << "  " << key << ":\n";
        for (const auto& row : val) os << "    " << row.dump() << "\n";
      } else {
        os << "  " << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
      }
    }
  };
  dump_section("inputs", report.value("inputs", json::object()));
  dump_section("results", report.value("results", json::object()));
  dump_section("verdicts", report.value("verdicts", json::object()));
  return os.str();
}

}  // namespace chardual
