// Copyright 2026 The gdd6 Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command implementations for the gdd6 tool. Each command writes to the
// given streams and returns an exit code, so tests can drive it in-process.

#pragma once

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gdd6.hpp"

namespace gdd6::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,
  kInfeasible = 2,
  kUnavailable = 3,
  kBudget = 4,
  kUsage = 5,
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InfeasibleParameters:
    case ErrorKind::InfeasibleInput:
      return kInfeasible;
    case ErrorKind::NotFound:
    case ErrorKind::MalformedDesign:
      return kFailed;
    case ErrorKind::IngredientUnavailable:
      return kUnavailable;
    case ErrorKind::BudgetExhausted:
      return kBudget;
    case ErrorKind::UnsupportedN:
    case ErrorKind::NotBalanced:
    case ErrorKind::InvalidIngredient:
    case ErrorKind::MismatchedClassCount:
    case ErrorKind::NonIntegralSplit:
    case ErrorKind::Parse:
    case ErrorKind::Io:
      return kUsage;
  }
  return kUsage;
}

inline int exit_code_for(SearchKind kind) {
  switch (kind) {
    case SearchKind::Found: return kOk;
    case SearchKind::ExhaustedNonexistent: return kFailed;
    case SearchKind::BudgetExhausted: return kBudget;
  }
  return kUsage;
}

inline ConfigClass parse_config(const std::string& text) {
  if (text == "3,3") return kC33;
  if (text == "2,4") return kC24;
  if (text == "1,5") return kC15;
  throw Error(ErrorKind::Parse, "config must be one of 3,3 2,4 1,5 (got '" + text + "')");
}

namespace detail {

inline std::string check_mark(const Check& c) {
  if (!c.applicable) return "[n/a ]";
  return c.pass ? "[pass]" : "[FAIL]";
}

// The design goes to `path` when given, otherwise to `out`.
inline void emit_design(const std::optional<std::string>& path, const GroupedDesign& design, const GddClaim& claim,
                        std::ostream& out) {
  if (path) write_design_file(*path, design, claim);
  else out << format_design(design, claim);
}

inline std::string point_pair(const PairDiscrepancy& d) { return to_string(d.p) + "-" + to_string(d.q); }

}  // namespace detail

struct FeasibilityArgs {
  int n = 0;
  std::optional<std::string> config;
  int l1 = 0;
  int l2 = 0;
};

inline int cmd_feasibility(const FeasibilityArgs& a, std::ostream& out) {
  std::optional<ConfigClass> cfg;
  if (a.config) cfg = parse_config(*a.config);
  if (a.n < 2) throw Error(ErrorKind::Parse, "n must be at least 2");
  const auto verdict = feasibility_verdict(a.n, {a.l1, a.l2}, cfg);
  out << "GDD(" << a.n << ",2,6;" << a.l1 << "," << a.l2 << ")";
  if (cfg) out << " configuration " << to_string(*cfg);
  out << "\n";
  out << "b=" << to_string(verdict.b) << " r=" << to_string(verdict.r) << "\n";
  for (const auto& c : verdict.checks) out << detail::check_mark(c) << " " << c.name << ": " << c.detail << "\n";
  if (verdict.feasible) {
    out << "feasible: all conditions hold (necessary only; existence is not implied)\n";
    return kOk;
  }
  out << "infeasible\n";
  return kInfeasible;
}

struct ConstructArgs {
  std::string config;
  int n = 0;
  std::optional<std::string> import_path;
  std::optional<std::string> out_path;
  std::optional<std::string> catalog;
  std::uint64_t budget = default_search_budget();
};

inline int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  const ConfigClass cfg = parse_config(a.config);
  ConstructOptions options;
  if (a.import_path) options.import_path = *a.import_path;
  options.budget = a.budget;
  const auto result = construct(cfg, a.n, options);
  std::ostream& report = a.out_path ? out : err;
  report << "recipe: " << result.recipe.name << "\n";
  report << "route: " << result.recipe.trace << "\n";
  report << "indices: " << to_string(IndexPair{result.claim.lambda1, result.claim.lambda2}) << "\n";
  report << "minimal: " << to_string(minimal_indices(cfg, a.n)) << "\n";
  report << "label: " << to_string(result.recipe.minimality) << "\n";
  report << "blocks: " << result.design.blocks.size() << "\n";
  detail::emit_design(a.out_path, result.design, result.claim, out);
  if (a.catalog) {
    Catalog catalog(*a.catalog);
    const auto entry = catalog.store(result.design, result.claim, result.recipe.name);
    report << "catalog: " << (catalog.root() / entry.path).string() << "\n";
  }
  return kOk;
}

struct VerifyArgs {
  std::string file;
  std::optional<int> l1;
  std::optional<int> l2;
  std::optional<std::string> config;
  int max_witnesses = 20;
};

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto file = read_design_file(a.file);
  const auto& d = file.design;
  GddClaim claim = file.claim;
  if (a.l1) claim.lambda1 = *a.l1;
  if (a.l2) claim.lambda2 = *a.l2;
  if (a.config) claim.config = parse_config(*a.config).configuration();

  const auto table = pair_counts(d);
  std::set<int> first, second;
  for (int p = 0; p < 2 * d.n; ++p)
    for (int q = p + 1; q < 2 * d.n; ++q) ((p < d.n) == (q < d.n) ? first : second).insert(table.at(p, q));
  const auto range = [](const std::set<int>& s) {
    if (s.empty()) return std::string("-");
    if (s.size() == 1) return std::to_string(*s.begin());
    return std::to_string(*s.begin()) + ".." + std::to_string(*s.rbegin());
  };
  out << "blocks: " << d.blocks.size() << "\n";
  out << "counted: lambda1=" << range(first) << " lambda2=" << range(second) << "\n";
  const auto config = classify_configuration(d);
  out << "counted configuration: " << (config ? to_string(*config) : std::string("mixed")) << "\n";

  const auto report = verify_gdd(d, claim);
  out << "claim: GDD(" << claim.n << ",2," << d.k << ";" << claim.lambda1 << "," << claim.lambda2 << ")";
  if (claim.config) out << " configuration " << to_string(*claim.config);
  out << "\n";
  if (report.pass) {
    out << "PASS b=" << report.b_observed << " r=" << report.r_min << "\n";
    return kOk;
  }
  out << "FAIL\n";
  for (const auto& v : report.violations)
    out << "  " << to_string(v.kind) << ": " << v.witness << " (observed " << v.observed << ", expected "
        << v.expected << ")\n";
  const auto bad = pair_discrepancies(d, claim);
  if (!bad.empty()) {
    out << "pair discrepancies: " << bad.size() << "\n";
    for (size_t i = 0; i < bad.size() && static_cast<int>(i) < a.max_witnesses; ++i)
      out << "  " << detail::point_pair(bad[i]) << " observed " << bad[i].observed << " expected "
          << bad[i].expected << "\n";
  }
  return kFailed;
}

struct SearchArgs {
  int n = 0;
  std::string config;
  int l1 = 0;
  int l2 = 0;
  std::uint64_t budget = default_search_budget();
  int threads = 1;
  bool nondeterministic = false;
  std::optional<std::string> out_path;
};

inline int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  SearchProblem problem;
  problem.n = a.n;
  problem.cfg = parse_config(a.config);
  problem.idx = {a.l1, a.l2};
  problem.budget = a.budget;
  problem.deterministic = !a.nondeterministic;
  problem.threads = a.threads;
  const auto outcome = search(problem);
  std::ostream& report = a.out_path || !outcome.witness ? out : err;
  report << "outcome: " << to_string(outcome.kind) << "\n";
  report << "nodes: " << outcome.stats.nodes << "\n";
  report << "max depth: " << outcome.stats.max_depth << "\n";
  report << "seconds: " << outcome.stats.wall_time << "\n";
  if (outcome.witness) {
    const GddClaim claim{a.n, a.l1, a.l2, problem.cfg.configuration()};
    detail::emit_design(a.out_path, *outcome.witness, claim, out);
  }
  return exit_code_for(outcome.kind);
}

struct TablesArgs {
  std::string which;
  bool diff = false;
  int n_max = 200;
};

inline int cmd_tables(const TablesArgs& a, std::ostream& out) {
  std::vector<TableDiff> diffs;
  if (a.which == "residue") {
    out << format_residue_table(residue_table());
    if (a.diff) diffs = diff_residue_table();
  } else if (a.which == "minimal33" || a.which == "minimal24" || a.which == "minimal15") {
    const ConfigClass cfg = a.which == "minimal33" ? kC33 : a.which == "minimal24" ? kC24 : kC15;
    out << format_minimal_table(minimal_table(cfg));
    if (a.diff) diffs = diff_minimal_table(cfg, a.n_max);
  } else if (a.which == "summary24" || a.which == "summary15") {
    const ConfigClass cfg = a.which == "summary24" ? kC24 : kC15;
    out << format_summary_table(summary_table(cfg));
    if (a.diff) diffs = diff_summary_table(cfg, a.n_max);
  } else {
    throw Error(ErrorKind::Parse, "unknown table '" + a.which + "'");
  }
  if (a.diff) {
    out << "\ndiffs against the published table: " << diffs.size() << "\n";
    out << format_diffs(diffs);
  }
  return kOk;
}

struct CatalogArgs {
  std::string action;  // list, check, add, get
  std::string dir;
  std::optional<std::string> file;
  std::string recipe = "imported";
  std::optional<std::string> config;
  std::optional<int> n, l1, l2;
  std::optional<std::string> out_path;
};

inline int cmd_catalog(const CatalogArgs& a, std::ostream& out) {
  Catalog catalog(a.dir);
  if (a.action == "list") {
    for (const auto& e : catalog.read_manifest())
      out << e.path.generic_string() << " " << e.recipe << " " << e.verified_at << "\n";
    return kOk;
  }
  if (a.action == "check") {
    int bad = 0;
    for (const auto& r : catalog.scan()) {
      out << to_string(r.status) << " " << r.path.generic_string();
      if (!r.problem.empty()) out << ": " << r.problem;
      out << "\n";
      bad += r.status != EntryStatus::Valid;
    }
    return bad ? kFailed : kOk;
  }
  if (a.action == "add") {
    if (!a.file) throw Error(ErrorKind::Parse, "catalog add needs a design file");
    auto file = read_design_file(*a.file);
    if (!file.claim.config) file.claim.config = classify_configuration(file.design);
    const auto entry = catalog.store(file.design, file.claim, a.recipe);
    out << "stored " << entry.path.generic_string() << "\n";
    return kOk;
  }
  if (a.action == "get") {
    if (!a.config || !a.n || !a.l1 || !a.l2) throw Error(ErrorKind::Parse, "catalog get needs --config --n --l1 --l2");
    const CatalogKey key{parse_config(*a.config), *a.n, {*a.l1, *a.l2}};
    const auto read = catalog.load(key);
    if (!read) {
      out << "no entry " << catalog_file(key).generic_string() << "\n";
      return kFailed;
    }
    if (read->status != EntryStatus::Valid) {
      out << "corrupt " << read->path.generic_string() << ": " << read->problem << "\n";
      return kFailed;
    }
    detail::emit_design(a.out_path, read->file->design, read->file->claim, out);
    return kOk;
  }
  throw Error(ErrorKind::Parse, "unknown catalog action '" + a.action + "'");
}

// Parses argv and dispatches. Library errors are mapped through
// exit_code_for; argument errors exit with kUsage.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-group divisible designs with block size 6", "gdd6"};
  app.require_subcommand(1);
  const std::uint64_t default_budget = default_search_budget();

  FeasibilityArgs fa;
  auto* feas = app.add_subcommand("feasibility", "Check the necessary conditions for given indices");
  feas->add_option("--n", fa.n, "group size")->required();
  feas->add_option("--config", fa.config, "configuration s,t");
  feas->add_option("--l1", fa.l1, "first-associate index")->required();
  feas->add_option("--l2", fa.l2, "second-associate index")->required();

  ConstructArgs ca;
  ca.budget = default_budget;
  auto* cons = app.add_subcommand("construct", "Build a design for a configuration and group size");
  cons->add_option("--config", ca.config, "configuration s,t")->required();
  cons->add_option("--n", ca.n, "group size")->required();
  cons->add_option("--import", ca.import_path, "ingredient file");
  cons->add_option("--out", ca.out_path, "design file to write");
  cons->add_option("--catalog", ca.catalog, "catalog directory to store the result in");
  cons->add_option("--budget", ca.budget, "node budget for ingredient search");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Verify a design file");
  ver->add_option("file", va.file, "design file")->required();
  ver->add_option("--l1", va.l1, "expected first-associate index");
  ver->add_option("--l2", va.l2, "expected second-associate index");
  ver->add_option("--config", va.config, "expected configuration s,t");
  ver->add_option("--max-witnesses", va.max_witnesses, "pair discrepancies to list");

  SearchArgs sa;
  sa.budget = default_budget;
  auto* srch = app.add_subcommand("search", "Exhaustive search for a design");
  srch->add_option("--n", sa.n, "group size")->required();
  srch->add_option("--config", sa.config, "configuration s,t")->required();
  srch->add_option("--l1", sa.l1, "first-associate index")->required();
  srch->add_option("--l2", sa.l2, "second-associate index")->required();
  srch->add_option("--budget", sa.budget, "node budget");
  srch->add_option("--threads", sa.threads, "worker threads (nondeterministic mode only)")->check(CLI::PositiveNumber);
  srch->add_flag("--nondeterministic", sa.nondeterministic, "allow parallel search");
  srch->add_option("--out", sa.out_path, "witness file to write");

  TablesArgs ta;
  auto* tabs = app.add_subcommand("tables", "Regenerate summary tables");
  tabs->add_option("which", ta.which, "residue, minimal33, minimal24, minimal15, summary24 or summary15")
      ->required()
      ->check(CLI::IsMember({"residue", "minimal33", "minimal24", "minimal15", "summary24", "summary15"}));
  tabs->add_flag("--diff-paper", ta.diff, "compare against the published tables");
  tabs->add_option("--n-max", ta.n_max, "largest n checked by the diff");

  CatalogArgs cat;
  auto* catc = app.add_subcommand("catalog", "Manage a catalog of verified designs");
  catc->add_option("action", cat.action, "list, check, add or get")
      ->required()
      ->check(CLI::IsMember({"list", "check", "add", "get"}));
  catc->add_option("--dir", cat.dir, "catalog directory")->required();
  catc->add_option("--file", cat.file, "design file (add)");
  catc->add_option("--recipe", cat.recipe, "recipe recorded for the entry (add)");
  catc->add_option("--config", cat.config, "configuration s,t (get)");
  catc->add_option("--n", cat.n, "group size (get)");
  catc->add_option("--l1", cat.l1, "first-associate index (get)");
  catc->add_option("--l2", cat.l2, "second-associate index (get)");
  catc->add_option("--out", cat.out_path, "design file to write (get)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*feas) return cmd_feasibility(fa, out);
    if (*cons) return cmd_construct(ca, out, err);
    if (*ver) return cmd_verify(va, out);
    if (*srch) return cmd_search(sa, out, err);
    if (*tabs) return cmd_tables(ta, out);
    if (*catc) return cmd_catalog(cat, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace gdd6::cli
