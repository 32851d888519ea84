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

// Exhaustive search for fixed-configuration two-group GDDs.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gdd6/budget.hpp"
#include "gdd6/constructions.hpp"
#include "gdd6/design.hpp"
#include "gdd6/detail/combinatorics.hpp"
#include "gdd6/detail/pair_cover.hpp"
#include "gdd6/error.hpp"
#include "gdd6/feasibility.hpp"

namespace gdd6 {

struct SearchProblem {
  int n = 0;
  ConfigClass cfg;
  IndexPair idx;
  std::uint64_t budget = default_search_budget();
  bool deterministic = true;
  int threads = 1;  // ignored when deterministic
  // Switches for the soundness regressions.
  bool symmetry_breaking = true;
  bool pair_residual_bound = true;
};

enum class SearchKind { Found, ExhaustedNonexistent, BudgetExhausted };

inline std::string_view to_string(SearchKind kind) {
  switch (kind) {
    case SearchKind::Found: return "Found";
    case SearchKind::ExhaustedNonexistent: return "ExhaustedNonexistent";
    case SearchKind::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

struct SearchStats {
  std::uint64_t nodes = 0;
  int max_depth = 0;
  double wall_time = 0;
};

struct SearchOutcome {
  SearchKind kind = SearchKind::ExhaustedNonexistent;
  std::optional<GroupedDesign> witness;
  SearchStats stats;
};

// All blocks meeting one group in s points and the other in t, in canonical
// order. For s = t each block is listed once.
inline std::vector<Block> candidate_blocks(const SearchProblem& problem) {
  const int n = problem.n;
  const int s = problem.cfg.s();
  const int t = problem.cfg.t();
  std::vector<Block> out;
  if (n < t) return out;
  const auto small = detail::combinations(n, s);
  const auto large = detail::combinations(n, t);
  for (const auto& a : small)
    for (const auto& b : large) out.push_back(Block::from_offsets(a, b));
  if (s != t)
    for (const auto& a : large)
      for (const auto& b : small) out.push_back(Block::from_offsets(a, b));
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline std::vector<int> flat_points(const Block& block, int n) {
  std::vector<int> pts;
  for (const auto& p : block.points) pts.push_back(flat_index(p, n));
  std::sort(pts.begin(), pts.end());
  return pts;
}

inline PairCoverProblem cover_problem(const SearchProblem& problem, const std::vector<Block>& cands, int blocks,
                                      int replication) {
  const int n = problem.n;
  PairCoverProblem cover;
  cover.v = 2 * n;
  for (const auto& c : cands) cover.candidates.push_back(flat_points(c, n));
  cover.pair_target.assign(static_cast<size_t>(n) * (2 * n - 1), 0);
  for (int p = 0; p < 2 * n; ++p)
    for (int q = p + 1; q < 2 * n; ++q)
      cover.pair_target[pair_index(p, q, 2 * n)] = (p < n) == (q < n) ? problem.idx.lambda1 : problem.idx.lambda2;
  cover.point_target.assign(2 * n, replication);
  cover.block_count = blocks;
  cover.use_pair_residual_bound = problem.pair_residual_bound;
  cover.budget = problem.budget;
  cover.threads = problem.deterministic ? 1 : std::max(1, problem.threads);
  return cover;
}

// With lambda1 = 1 the pair {A0,A1} lies in exactly one block. Relabelling
// A (fixing A0 and A1) and B moves that block to one with A-side
// {A0,...,A(a-1)} and B-side {B0,...}, one per admissible split a >= 2.
inline void break_symmetry(PairCoverProblem& cover, const SearchProblem& problem, const std::vector<Block>& cands) {
  if (problem.idx.lambda1 != 1 || problem.n < 2) return;
  const int n = problem.n;
  cover.root_pair = pair_index(0, 1, 2 * n);
  for (int a : {problem.cfg.s(), problem.cfg.t()}) {
    if (a < 2) continue;
    std::vector<int> on_a(a), on_b(6 - a);
    for (int i = 0; i < a; ++i) on_a[i] = i;
    for (int i = 0; i < 6 - a; ++i) on_b[i] = i;
    const Block canon = Block::from_offsets(on_a, on_b);
    const auto it = std::lower_bound(cands.begin(), cands.end(), canon);
    if (it != cands.end() && *it == canon) {
      const int c = static_cast<int>(it - cands.begin());
      if (std::find(cover.root_choices.begin(), cover.root_choices.end(), c) == cover.root_choices.end())
        cover.root_choices.push_back(c);
    }
  }
  std::sort(cover.root_choices.begin(), cover.root_choices.end());
}

inline SearchOutcome run_cover(const PairCoverProblem& cover, const std::vector<Block>& cands, int n,
                               const GddClaim& claim) {
  const auto result = PairCoverSearch(cover).run();
  SearchOutcome out;
  out.stats = {result.nodes, result.max_depth, result.seconds};
  switch (result.kind) {
    case CoverKind::Found: {
      GroupedDesign design{n, 6, {}};
      for (int c : result.chosen) design.blocks.push_back(cands[c]);
      design = canonicalize(std::move(design));
      if (!verify_gdd(design, claim).pass) throw std::logic_error("search produced an unverified witness");
      out.kind = SearchKind::Found;
      out.witness = std::move(design);
      break;
    }
    case CoverKind::Exhausted: out.kind = SearchKind::ExhaustedNonexistent; break;
    case CoverKind::BudgetExhausted: out.kind = SearchKind::BudgetExhausted; break;
  }
  return out;
}

inline void require_feasible(const SearchProblem& problem) {
  const auto verdict = feasibility_verdict(problem.n, problem.idx, problem.cfg, {.require_minimal_multiple = false});
  if (!verdict.feasible) {
    std::string failed;
    for (const auto& c : verdict.checks)
      if (c.applicable && !c.pass) failed += (failed.empty() ? "" : ", ") + c.name;
    throw Error(ErrorKind::InfeasibleInput, "GDD(" + std::to_string(problem.n) + ",2,6;" + to_string(problem.idx) +
                                                ") fails necessary conditions: " + failed);
  }
}

}  // namespace detail

inline SearchOutcome search(const SearchProblem& problem) {
  detail::require_feasible(problem);
  const auto [b, r] = block_and_replication(problem.n, problem.idx);
  const auto cands = candidate_blocks(problem);
  auto cover = detail::cover_problem(problem, cands, static_cast<int>(b.numerator()), static_cast<int>(r.numerator()));
  if (problem.symmetry_breaking) detail::break_symmetry(cover, problem, cands);
  const GddClaim claim{problem.n, problem.idx.lambda1, problem.idx.lambda2, problem.cfg.configuration()};
  return detail::run_cover(cover, cands, problem.n, claim);
}

// Keeps `kept` fixed and searches for the remaining blocks of a GDD with the
// given indices and configuration.
inline SearchOutcome complete_by_search(const GroupedDesign& kept, const ConfigClass& cfg, const IndexPair& idx,
                                        std::uint64_t budget = default_search_budget()) {
  SearchProblem problem{kept.n, cfg, idx, budget};
  detail::require_feasible(problem);
  const auto [b, r] = block_and_replication(problem.n, idx);
  const auto cands = candidate_blocks(problem);
  auto cover = detail::cover_problem(problem, cands, static_cast<int>(b.numerator()), static_cast<int>(r.numerator()));
  for (const auto& block : kept.blocks) {
    Block sorted = block;
    std::sort(sorted.points.begin(), sorted.points.end());
    const auto it = std::lower_bound(cands.begin(), cands.end(), sorted);
    if (it == cands.end() || *it != sorted) {
      SearchOutcome out;
      out.kind = SearchKind::ExhaustedNonexistent;
      return out;
    }
    cover.fixed.push_back(static_cast<int>(it - cands.begin()));
  }
  const GddClaim claim{problem.n, idx.lambda1, idx.lambda2, cfg.configuration()};
  return detail::run_cover(cover, cands, problem.n, claim);
}

struct RepairResult {
  std::vector<PairDiscrepancy> discrepancies;  // of the input
  std::optional<size_t> removed;               // index of the replaced block
  SearchOutcome outcome;
};

// Tries removing each block that covers an over-counted pair and completing
// the rest by search.
inline RepairResult repair_by_search(const GroupedDesign& design, const ConfigClass& cfg, const IndexPair& idx,
                                     std::uint64_t budget = default_search_budget()) {
  RepairResult result;
  const GddClaim claim{design.n, idx.lambda1, idx.lambda2, cfg.configuration()};
  result.discrepancies = pair_discrepancies(design, claim);
  if (result.discrepancies.empty()) {
    result.outcome.kind = SearchKind::Found;
    result.outcome.witness = canonicalize(design);
    return result;
  }
  for (size_t i = 0; i < design.blocks.size(); ++i) {
    const auto& block = design.blocks[i];
    const bool suspect = std::any_of(result.discrepancies.begin(), result.discrepancies.end(), [&](const auto& d) {
      const auto has = [&](const Point& p) {
        return std::find(block.points.begin(), block.points.end(), p) != block.points.end();
      };
      return d.observed > d.expected && has(d.p) && has(d.q);
    });
    if (!suspect) continue;
    GroupedDesign kept{design.n, design.k, {}};
    for (size_t j = 0; j < design.blocks.size(); ++j)
      if (j != i) kept.blocks.push_back(design.blocks[j]);
    auto outcome = complete_by_search(kept, cfg, idx, budget);
    if (outcome.kind == SearchKind::Found) {
      result.removed = i;
      result.outcome = std::move(outcome);
      return result;
    }
  }
  result.outcome.kind = SearchKind::ExhaustedNonexistent;
  return result;
}

struct CrossValidationEntry {
  int n = 0;
  IndexPair idx;
  bool below_minimal = false;
  bool feasible = false;
  std::optional<SearchKind> outcome;          // absent when search was skipped
  std::optional<Minimality> construction;     // plan label at the minimal pair
  bool conflict = false;
  std::string note;
};

struct CrossValidationReport {
  ConfigClass cfg;
  int n_max = 0;
  std::vector<CrossValidationEntry> entries;

  bool consistent() const {
    return std::none_of(entries.begin(), entries.end(), [](const auto& e) { return e.conflict; });
  }
};

// For each n up to n_max: every index pair at or below the minimal pair is
// checked for feasibility and, when feasible, searched. A design found below
// the minimal pair, or proven absent where the plan claims a minimal
// construction, is a conflict.
inline CrossValidationReport cross_validate(const ConfigClass& cfg, int n_max, std::uint64_t budget = 1'000'000) {
  CrossValidationReport report{cfg, n_max, {}};
  for (int n = std::max(3, cfg.min_n()); n <= n_max; ++n) {
    const IndexPair m = minimal_indices(cfg, n);
    for (int l1 = 1; l1 <= m.lambda1; ++l1)
      for (int l2 = 1; l2 <= m.lambda2; ++l2) {
        const IndexPair idx{l1, l2};
        CrossValidationEntry e{n, idx, idx != m, false, std::nullopt, std::nullopt, false, ""};
        const auto verdict = feasibility_verdict(n, idx, cfg, {.require_minimal_multiple = false});
        e.feasible = verdict.feasible;
        if (!e.below_minimal) e.construction = plan(cfg, n).minimality;
        if (!e.feasible) {
          if (!e.below_minimal) {
            e.conflict = true;
            e.note = "minimal pair fails its own necessary conditions";
          } else {
            continue;
          }
        } else {
          SearchProblem problem{n, cfg, idx, budget};
          const auto outcome = search(problem);
          e.outcome = outcome.kind;
          if (e.below_minimal && outcome.kind == SearchKind::Found) {
            e.conflict = true;
            e.note = "design found below the minimal indices";
          } else if (!e.below_minimal && outcome.kind == SearchKind::ExhaustedNonexistent &&
                     e.construction == Minimality::Minimal) {
            e.conflict = true;
            e.note = "no design exists but a minimal construction is claimed";
          } else if (!e.below_minimal && outcome.kind == SearchKind::ExhaustedNonexistent) {
            e.note = "no design at the minimal pair; construction is " + std::string(to_string(*e.construction));
          }
        }
        report.entries.push_back(std::move(e));
      }
  }
  return report;
}

}  // namespace gdd6
