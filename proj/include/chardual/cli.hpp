#pragma once

// `chardual <command> [options]`; reports go to the output stream as JSON
// (default) or plain text.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chardual/report.hpp"
#include "chardual/table/provider.hpp"

namespace chardual {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitUnknownGroup = 3,
  kExitMalformedSpec = 4,
  kExitNotPrime = 5,
  kExitCapExceeded = 6,
  kExitTableError = 7,
  kExitFailure = 8,
};

#ifndef CHARDUAL_DEFAULT_CATALOG
#define CHARDUAL_DEFAULT_CATALOG "data/catalog.json"
#endif

struct RunConfig {
  std::string command;
  std::string group_name;
  std::string spec_path;
  std::string catalog_path = CHARDUAL_DEFAULT_CATALOG;
  std::string table_path;
  std::string save_path;
  std::optional<std::uint64_t> dixon;
  std::string format = "json";
  std::uint64_t p = 0;
  unsigned n = 2;
  unsigned nmax = 5;
  std::size_t terms = 0;
  bool real = false;
  bool alt_normalizer = false;
  std::vector<std::size_t> block;
  std::size_t cap = kDefaultElementCap;
};

namespace cli_detail {

class UnknownGroup : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

inline GroupSpec resolve_spec(const RunConfig& cfg) {
  if (!cfg.group_name.empty() == !cfg.spec_path.empty())
    throw InvalidArgument("give exactly one of --group or --spec");
  if (!cfg.spec_path.empty()) return load_group_spec(cfg.spec_path);
  auto catalog = load_catalog(cfg.catalog_path);
  if (const auto* spec = find_group(catalog, cfg.group_name)) return *spec;
  std::string known;
  for (const auto& s : catalog) known += (known.empty() ? "" : ", ") + s.name;
  throw UnknownGroup("unknown group '" + cfg.group_name + "' (catalog: " + known + ")");
}

inline json execute(const RunConfig& cfg, int& status) {
  if (cfg.command == "verify") {
    auto results = verify_catalog(load_catalog(cfg.catalog_path));
    auto r = verify_report(results);
    status = r["verdicts"]["all_passed"].get<bool>() ? kExitOk : kExitVerifyFailed;
    return r;
  }

  if (cfg.p != 0 && !is_prime(cfg.p)) throw NotPrime("-p " + std::to_string(cfg.p) + " is not prime");
  const auto spec = resolve_spec(cfg);
  const auto group = enumerate(spec, cfg.cap);
  const auto cd = conjugacy_data(group);
  if (cfg.command == "classes") return classes_report(group, cd);

  std::unique_ptr<TableProvider> provider;
  if (!cfg.table_path.empty()) provider = std::make_unique<FileTableProvider>(cfg.table_path, cd.classes);
  else provider = std::make_unique<ComputedTableProvider>(group, cd, cfg.dixon);
  const auto table = provider->table();

  if (cfg.command == "table") {
    if (!cfg.save_path.empty()) save_table(table, cfg.save_path);
    return table_report(table);
  }
  if (cfg.command == "gamma") return gamma_report(table, cfg.nmax, cfg.real);
  if (cfg.command == "recover") {
    auto len = cfg.terms ? cfg.terms : divisors(table.order()).size();
    return recover_report(table, len, cfg.real);
  }
  if (cfg.p == 0) throw InvalidArgument("command '" + cfg.command + "' needs -p");
  if (cfg.command == "defect") {
    auto d = cfg.n >= 2 ? defect_zero_by_characters(table, cfg.p, cfg.n, cfg.real) : defect_probe_n1(table, cfg.p, cfg.real);
    return defect_report_json(table, d);
  }
  const auto map = build_reduction(table.exponent(), cfg.p);
  if (cfg.command == "pelements") return pelements_report(table, cfg.p, map);
  if (cfg.command == "blocks") return blocks_report(table, principal_block_members(table, cfg.p, map), map);
  if (cfg.command == "counterexample") {
    if (cfg.alt_normalizer) return alt_normalizer_json(table, alt_normalizer_report(table, cfg.p));
    auto block = cfg.block.empty() ? principal_block_members(table, cfg.p, map).member_indices() : cfg.block;
    for (auto b : block)
      if (b >= table.rows.size()) throw InvalidArgument("block index " + std::to_string(b) + " out of range");
    return counterexample_report(table, cfg.p, block);
  }
  throw InvalidArgument("unknown command '" + cfg.command + "'");
}

}  // namespace cli_detail

/// Parses argv-style arguments (without the program name), runs the command,
/// and writes the report to out. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Character tables and class-size/defect duality checks for small finite groups", "chardual"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool needs_p) {
    sub->add_option("--group,-g", cfg.group_name, "Catalog group name");
    sub->add_option("--spec", cfg.spec_path, "Group spec JSON file");
    sub->add_option("--catalog", cfg.catalog_path, "Catalog JSON file");
    sub->add_option("--cap", cfg.cap, "Element cap for enumeration");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "human"}));
    if (needs_p) sub->add_option("-p,--prime", cfg.p, "Prime p")->required();
  };
  auto add_table = [&](CLI::App* sub) {
    sub->add_option("--table", cfg.table_path, "Load the character table from this file");
    sub->add_option("--dixon-prime", cfg.dixon, "Compute with this Dixon prime");
  };

  auto* classes = app.add_subcommand("classes", "Conjugacy classes, centralizers, real flags");
  add_common(classes, false);
  auto* table = app.add_subcommand("table", "Compute, load or save the character table");
  add_common(table, false);
  add_table(table);
  table->add_option("--save", cfg.save_path, "Write the table to this file");
  auto* gamma = app.add_subcommand("gamma", "gamma_n / delta_n multiplicities for every character");
  add_common(gamma, false);
  add_table(gamma);
  gamma->add_option("-n,--nmax", cfg.nmax, "Largest n")->check(CLI::PositiveNumber);
  gamma->add_flag("--real", cfg.real, "Use psi (delta_n) instead of pi");
  auto* recover = app.add_subcommand("recover", "Recover class sizes from [1_G, pi^n]");
  add_common(recover, false);
  add_table(recover);
  recover->add_option("--terms", cfg.terms, "Number of multiplicities to use (default d(|G|))");
  recover->add_flag("--real", cfg.real, "Recover real class sizes from [1_G, psi^n]");
  auto* defect = app.add_subcommand("defect", "p-defect-0 classes: character side vs direct");
  add_common(defect, true);
  add_table(defect);
  defect->add_option("-n", cfg.n, "Power n (n >= 2 for the criterion; n = 1 is a probe)")->check(CLI::PositiveNumber);
  defect->add_flag("--real", cfg.real, "Real classes and delta_n");
  auto* pel = app.add_subcommand("pelements", "p-element congruence vs element orders");
  add_common(pel, true);
  add_table(pel);
  auto* blocks = app.add_subcommand("blocks", "Principal block membership");
  add_common(blocks, true);
  add_table(blocks);
  auto* counter = app.add_subcommand("counterexample", "gamma(psi) over the principal block");
  add_common(counter, true);
  add_table(counter);
  counter->add_option("--block", cfg.block, "Character indices to use instead of the principal block")->delimiter(',');
  counter->add_flag("--alt-normalizer", cfg.alt_normalizer, "Compare alternative divisibility moduli");
  auto* verify = app.add_subcommand("verify", "Full invariant suite over the catalog");
  verify->add_option("--catalog", cfg.catalog_path, "Catalog JSON file");
  verify->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "human"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << ex.what() << "\n" << app.help();
    return kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  int status = kExitOk;
  try {
    auto report = cli_detail::execute(cfg, status);
    out << (cfg.format == "human" ? render_human(report) : report.dump(2) + "\n");
    return status;
  } catch (const cli_detail::UnknownGroup& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUnknownGroup;
  } catch (const cli_detail::NotPrime& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitNotPrime;
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitMalformedSpec;
  } catch (const CapExceeded& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitCapExceeded;
  } catch (const TableError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitTableError;
  } catch (const InvalidArgument& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace chardual
