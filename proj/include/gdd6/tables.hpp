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

// Regenerated summary tables, the published versions for comparison, and
// cell-level diffs between them.

#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gdd6/constructions.hpp"
#include "gdd6/feasibility.hpp"
#include "gdd6/rational.hpp"

namespace gdd6 {

struct TableDiff {
  std::string table;
  std::string cell;
  std::string published;
  std::string computed;
};

inline std::string format_diffs(const std::vector<TableDiff>& diffs) {
  std::ostringstream out;
  for (const auto& d : diffs)
    out << d.table << " " << d.cell << ": published " << d.published << ", computed " << d.computed << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Residue table: for l2 = c (mod 15) and l1 = a (mod 5), the residues of n
// mod 15 for which some l1 in {a, a+5, a+10} gives integral b and r.

using ResidueSet = std::set<int>;
using ResidueTable = std::array<std::array<ResidueSet, 5>, 15>;

inline ResidueTable residue_table() {
  ResidueTable t;
  for (int c = 0; c < 15; ++c)
    for (int a = 0; a < 5; ++a)
      for (int n = 0; n < 15; ++n)
        for (int l1 = a; l1 < 15; l1 += 5)
          if (residue_feasible(n + 15, {l1 + 15, c + 15})) {
            t[c][a].insert(n);
            break;
          }
  return t;
}

namespace detail {

inline ResidueSet residues_where(int modulus, int r) {
  ResidueSet s;
  for (int n = 0; n < 15; ++n)
    if (n % modulus == r) s.insert(n);
  return s;
}

// "any", "-" (impossible), "r mod 5", "r mod 3" or a list of residues mod 15.
inline ResidueSet parse_cell(const std::string& text) {
  if (text == "any") return residues_where(1, 0);
  if (text == "-") return {};
  if (text.size() > 2 && text.substr(text.size() - 2) == "m5") return residues_where(5, std::stoi(text));
  if (text.size() > 2 && text.substr(text.size() - 2) == "m3") return residues_where(3, std::stoi(text));
  ResidueSet s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) s.insert(std::stoi(item));
  return s;
}

}  // namespace detail

inline std::string format_residue_set(const ResidueSet& s) {
  if (s.empty()) return "impossible";
  if (s.size() == 15) return "any n";
  for (int m : {5, 3})
    for (int r = 0; r < m; ++r)
      if (s == detail::residues_where(m, r)) return "n=" + std::to_string(r) + " mod " + std::to_string(m);
  std::string out = "n=";
  bool first = true;
  for (int x : s) {
    out += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return out + " mod 15";
}

inline const ResidueTable& published_residue_table() {
  static const ResidueTable table = [] {
    static const std::array<std::array<const char*, 5>, 15> cells{{
        {"any", "1m5", "1m5", "1m5", "1m5"},
        {"-", "3,8", "9,14", "2,12", "-"},
        {"-", "12", "3,8", "-", "9"},
        {"0m5", "4m5", "-", "3m5", "2m5"},
        {"0", "-", "2,12", "9,14", "3,8"},
        {"0m3", "6", "6,11", "6,11", "6,11"},
        {"0m5", "3m5", "4m5", "2m5", "-"},
        {"-", "2,12", "3,8", "-", "9,14"},
        {"-", "4,9", "-", "3,8", "2,12"},
        {"0m5", "-", "2m5", "4m5", "3m5"},
        {"0m3", "6,11", "6,11", "6", "6,11"},
        {"-", "3", "9,14", "2,12", "-"},
        {"0m5", "2m5", "3,13", "-", "4,9"},
        {"-", "9,14", "-", "3,8", "2,12"},
        {"-", "-", "2,12", "9,14", "3m5"},
    }};
    ResidueTable t;
    for (int c = 0; c < 15; ++c)
      for (int a = 0; a < 5; ++a) t[c][a] = detail::parse_cell(cells[c][a]);
    return t;
  }();
  return table;
}

inline std::vector<TableDiff> diff_residue_table() {
  const auto computed = residue_table();
  const auto& published = published_residue_table();
  std::vector<TableDiff> diffs;
  for (int c = 0; c < 15; ++c)
    for (int a = 0; a < 5; ++a)
      if (computed[c][a] != published[c][a])
        diffs.push_back({"residue", "l2=" + std::to_string(c) + " l1=" + std::to_string(a) + " mod 5",
                         format_residue_set(published[c][a]), format_residue_set(computed[c][a])});
  return diffs;
}

inline std::string format_residue_table(const ResidueTable& t) {
  std::ostringstream out;
  out << "l2 mod 15 | l1=0 mod 5 | l1=1 mod 5 | l1=2 mod 5 | l1=3 mod 5 | l1=4 mod 5\n";
  for (int c = 0; c < 15; ++c) {
    out << c;
    for (int a = 0; a < 5; ++a) out << " | " << format_residue_set(t[c][a]);
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Minimal index tables: rows of residue classes with l1 = c1 n and
// l2 = c2 (n-1).

struct MinimalRow {
  int modulus = 1;
  std::vector<int> residues;
  Rational c1;
  Rational c2;
};

inline int table_modulus(const ConfigClass& cfg) {
  switch (cfg.tag) {
    case ConfigTag::C33: return 6;
    case ConfigTag::C24: return 56;
    case ConfigTag::C15: return 20;
  }
  return 1;
}

inline int table_start(const ConfigClass& cfg) { return std::max(3, cfg.min_n()); }

namespace detail {

inline std::string coefficient_text(const Rational& c, const std::string& var) {
  std::string out;
  if (c.numerator() != 1) out += std::to_string(c.numerator());
  out += var;
  if (c.denominator() != 1) out += "/" + std::to_string(c.denominator());
  return out;
}

inline void add_to_rows(std::vector<MinimalRow>& rows, int modulus, int residue, const Rational& c1, const Rational& c2) {
  for (auto& row : rows)
    if (row.c1 == c1 && row.c2 == c2) {
      row.residues.push_back(residue);
      return;
    }
  rows.push_back({modulus, {residue}, c1, c2});
}

}  // namespace detail

inline std::string format_pair(const MinimalRow& row) {
  return "(" + detail::coefficient_text(row.c1, "n") + ", " + detail::coefficient_text(row.c2, "(n-1)") + ")";
}

inline std::string residues_text(const std::vector<int>& residues, int modulus) {
  std::string out = "n=";
  for (size_t i = 0; i < residues.size(); ++i) out += (i ? "," : "") + std::to_string(residues[i]);
  return out + " mod " + std::to_string(modulus);
}

// Fits each residue class from its smallest member; the fit is confirmed
// separately against every n by diff_minimal_table.
inline std::vector<MinimalRow> minimal_table(const ConfigClass& cfg) {
  const int m = table_modulus(cfg);
  std::vector<MinimalRow> rows;
  for (int r = 0; r < m; ++r) {
    int n = r;
    while (n < table_start(cfg)) n += m;
    const IndexPair idx = minimal_indices(cfg, n);
    detail::add_to_rows(rows, m, r, Rational(idx.lambda1, n), Rational(idx.lambda2, n - 1));
  }
  return rows;
}

inline std::vector<MinimalRow> published_minimal_table(const ConfigClass& cfg) {
  using R = Rational;
  switch (cfg.tag) {
    case ConfigTag::C33:
      return {{6, {0}, R(2, 3), R(1)}, {6, {1}, R(1), R(3, 2)}, {6, {2}, R(6), R(9)},
              {6, {3}, R(1, 3), R(1, 2)}, {6, {4}, R(2), R(3)}, {6, {5}, R(3), R(9, 2)}};
    case ConfigTag::C24:
      return {{56, {0, 16, 24, 32, 40, 48}, R(7, 8), R(1)},
              {56, {2, 6, 10, 14, 18, 26, 30, 34, 38, 42, 46, 54}, R(7, 2), R(4)},
              {56, {4, 12, 20, 28, 44, 52}, R(7, 4), R(2)},
              {56, {8}, R(1, 8), R(1, 7)},
              {56, {22, 50}, R(1, 2), R(4, 7)},
              {56, {36}, R(1, 4), R(2, 7)},
              {56, {3, 5, 7, 9, 11, 13, 17, 19, 21, 23, 25, 27, 31, 33, 35, 37, 39, 41, 45, 47, 49, 51, 53, 55}, R(7), R(8)},
              {56, {1, 15, 29, 43}, R(1), R(8, 7)}};
    case ConfigTag::C15:
      return {{20, {0, 6, 10, 11, 15, 16}, R(2), R(1)},
              {20, {1, 5}, R(1), R(1, 2)},
              {20, {2, 4, 8, 12, 14, 18}, R(10), R(5)},
              {20, {3, 7, 9, 13, 17, 19}, R(5), R(5, 2)}};
  }
  return {};
}

inline std::optional<IndexPair> published_minimal(const ConfigClass& cfg, int n) {
  for (const auto& row : published_minimal_table(cfg))
    for (int r : row.residues)
      if (n % row.modulus == r) {
        const Rational l1 = row.c1 * n;
        const Rational l2 = row.c2 * (n - 1);
        if (!is_integral(l1) || !is_integral(l2)) return std::nullopt;
        return IndexPair{static_cast<int>(l1.numerator()), static_cast<int>(l2.numerator())};
      }
  return std::nullopt;
}

// One entry per n in [start, n_max] whose computed minimal pair differs from
// the published row covering it.
inline std::vector<TableDiff> diff_minimal_table(const ConfigClass& cfg, int n_max = 200) {
  std::vector<TableDiff> diffs;
  const std::string name = "minimal" + std::to_string(cfg.s()) + std::to_string(cfg.t());
  for (int n = table_start(cfg); n <= n_max; ++n) {
    const IndexPair computed = minimal_indices(cfg, n);
    const auto published = published_minimal(cfg, n);
    if (!published || *published != computed)
      diffs.push_back({name, "n=" + std::to_string(n), published ? to_string(*published) : "(non-integral)",
                       to_string(computed)});
  }
  return diffs;
}

inline std::string format_minimal_table(const std::vector<MinimalRow>& rows) {
  std::ostringstream out;
  out << "n | l1 | l2\n";
  for (const auto& row : rows)
    out << residues_text(row.residues, row.modulus) << " | " << detail::coefficient_text(row.c1, "n") << " | "
        << detail::coefficient_text(row.c2, "(n-1)") << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Construction summaries: the recipe plan() picks for each n, with its
// minimality label.

struct SummaryRow {
  std::string condition;
  std::string construction;
  std::string claimed;
  Minimality label = Minimality::Other;
};

inline int summary_modulus(const ConfigClass& cfg) {
  switch (cfg.tag) {
    case ConfigTag::C33: return 6;
    case ConfigTag::C24: return 168;
    case ConfigTag::C15: return 20;
  }
  return 1;
}

namespace detail {

inline std::string claimed_formula(const ConstructionRecipe& r) {
  return "(" + coefficient_text(Rational(r.claimed.lambda1, r.n), "n") + ", " +
         coefficient_text(Rational(r.claimed.lambda2, r.n - 1), "(n-1)") + ")";
}

// Values of n handled by a special case in plan().
inline std::vector<int> summary_exceptions(const ConfigClass& cfg) {
  switch (cfg.tag) {
    case ConfigTag::C33: return {6};
    case ConfigTag::C24: return {15};
    case ConfigTag::C15: return {10, 15, 160, 190};
  }
  return {};
}

}  // namespace detail

// Rows per residue class (represented by its smallest ordinary member) plus
// one row per special n; residues with identical rows are merged.
inline std::vector<SummaryRow> summary_table(const ConfigClass& cfg) {
  const int m = summary_modulus(cfg);
  const auto exceptions = detail::summary_exceptions(cfg);
  struct Key {
    std::string construction, claimed;
    Minimality label;
    std::vector<int> residues;
  };
  std::vector<Key> keys;
  for (int r = 0; r < m; ++r) {
    int n = r;
    while (n < table_start(cfg) || std::find(exceptions.begin(), exceptions.end(), n) != exceptions.end()) n += m;
    const auto recipe = plan(cfg, n);
    const std::string claimed = detail::claimed_formula(recipe);
    auto it = std::find_if(keys.begin(), keys.end(), [&](const Key& k) {
      return k.construction == recipe.name && k.claimed == claimed && k.label == recipe.minimality;
    });
    if (it == keys.end()) keys.push_back({recipe.name, claimed, recipe.minimality, {r}});
    else it->residues.push_back(r);
  }
  std::vector<SummaryRow> rows;
  for (const auto& k : keys) rows.push_back({residues_text(k.residues, m), k.construction, k.claimed, k.label});
  for (int n : exceptions) {
    const auto recipe = plan(cfg, n);
    rows.push_back({"n=" + std::to_string(n), recipe.name, to_string(recipe.claimed), recipe.minimality});
  }
  return rows;
}

// Label the published summaries give for n, if any row covers it.
inline std::optional<Minimality> published_label(const ConfigClass& cfg, int n) {
  const auto in = [](int x, std::initializer_list<int> set) { return std::find(set.begin(), set.end(), x) != set.end(); };
  switch (cfg.tag) {
    case ConfigTag::C33:
      return Minimality::Minimal;
    case ConfigTag::C24: {
      if (n == 15) return Minimality::Minimal;
      const int m56 = n % 56, m24 = n % 24;
      if (in(m56, {0, 16, 24, 32, 40, 48}))
        return m24 == 16 ? Minimality::Minimal : Minimality::NearMinimal;
      if (in(m56, {2, 10, 18, 26, 34, 42, 6, 14, 30, 38, 46, 54})) return Minimality::Minimal;
      if (in(m56, {4, 12, 20, 28, 44, 52})) return Minimality::Minimal;
      if (m56 == 8) return m24 == 16 ? Minimality::SevenTimes : Minimality::FourteenTimes;
      if (in(m56, {22, 50, 36})) return Minimality::SevenTimes;
      if (in(n % 14, {3, 5, 7, 9, 11, 13})) return Minimality::Minimal;
      if (n % 14 == 1) return Minimality::SevenTimes;
      return std::nullopt;
    }
    case ConfigTag::C15: {
      const int m20 = n % 20;
      if (in(n, {10, 15, 160, 190})) return std::nullopt;
      if (in(m20, {0, 10, 11, 15, 6, 16, 1, 5})) return Minimality::Minimal;
      return Minimality::NearMinimal;
    }
  }
  return std::nullopt;
}

inline std::vector<TableDiff> diff_summary_table(const ConfigClass& cfg, int n_max = 200) {
  std::vector<TableDiff> diffs;
  const std::string name = "summary" + std::to_string(cfg.s()) + std::to_string(cfg.t());
  for (int n = table_start(cfg); n <= n_max; ++n) {
    const auto published = published_label(cfg, n);
    const auto computed = plan(cfg, n).minimality;
    if (published && *published != computed)
      diffs.push_back({name, "n=" + std::to_string(n), std::string(to_string(*published)), std::string(to_string(computed))});
  }
  return diffs;
}

inline std::string format_summary_table(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << "n | construction | indices | minimality\n";
  for (const auto& r : rows)
    out << r.condition << " | " << r.construction << " | " << r.claimed << " | " << to_string(r.label) << "\n";
  return out.str();
}

}  // namespace gdd6
