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

// Backtracking engine that selects a multiset of candidate blocks so that
// every pair of points is covered an exact number of times. Used for GDD
// search (candidates = fixed-split blocks) and for BIBD ingredient search.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "gdd6/detail/combinatorics.hpp"

namespace gdd6::detail {

struct PairCoverProblem {
  int v = 0;
  std::vector<std::vector<int>> candidates;  // sorted point lists
  std::vector<int> pair_target;              // indexed by pair_index(p, q, v)
  std::vector<int> point_target;
  int block_count = 0;
  std::vector<int> fixed;  // candidate indices placed before the search starts
  // Optional restriction of the first decision: branch on this pair, using
  // only these candidates. Sound only when the pair's target is 1.
  std::optional<int> root_pair;
  std::vector<int> root_choices;
  bool use_pair_residual_bound = true;
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
  int threads = 1;
};

enum class CoverKind { Found, Exhausted, BudgetExhausted };

struct PairCoverResult {
  CoverKind kind = CoverKind::Exhausted;
  std::vector<int> chosen;  // candidate indices, including fixed ones
  std::uint64_t nodes = 0;
  int max_depth = 0;
  double seconds = 0;
};

class PairCoverSearch {
 public:
  explicit PairCoverSearch(const PairCoverProblem& problem) : p_(problem) {
    const int pairs = p_.v * (p_.v - 1) / 2;
    pair_cands_.assign(pairs, {});
    point_cands_.assign(p_.v, {});
    cand_pairs_.resize(p_.candidates.size());
    for (int c = 0; c < static_cast<int>(p_.candidates.size()); ++c) {
      const auto& block = p_.candidates[c];
      for (size_t i = 0; i < block.size(); ++i) {
        point_cands_[block[i]].push_back(c);
        for (size_t j = i + 1; j < block.size(); ++j) {
          const int e = pair_index(block[i], block[j], p_.v);
          pair_cands_[e].push_back(c);
          cand_pairs_[c].push_back(e);
        }
      }
    }
  }

  PairCoverResult run() {
    const auto start = std::chrono::steady_clock::now();
    PairCoverResult result;
    State root(*this);
    bool consistent = true;
    for (int c : p_.fixed) {
      if (root.blocked[c] != 0) consistent = false;
      root.place(c);
    }
    nodes_ = 0;
    stop_ = false;
    budget_hit_ = false;
    if (!consistent || static_cast<int>(p_.fixed.size()) > p_.block_count) {
      result.kind = CoverKind::Exhausted;
    } else if (p_.threads <= 1) {
      result.kind = root.dfs(0, /*root_level=*/true) ? CoverKind::Found : outcome_without_witness();
      if (result.kind == CoverKind::Found) result.chosen = root.chosen;
      result.max_depth = root.max_depth;
    } else {
      result = run_parallel(root);
    }
    result.nodes = std::min<std::uint64_t>(nodes_.load(), p_.budget);
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }

 private:
  struct State {
    PairCoverSearch* s;
    std::vector<int> pair_count, point_count, blocked, viable, last_for_pair;
    std::vector<int> chosen;
    int max_depth = 0;

    explicit State(PairCoverSearch& search) : s(&search) {
      const auto& p = search.p_;
      pair_count.assign(search.pair_cands_.size(), 0);
      point_count.assign(p.v, 0);
      blocked.assign(p.candidates.size(), 0);
      last_for_pair.assign(search.pair_cands_.size(), -1);
      viable.resize(search.pair_cands_.size());
      for (size_t e = 0; e < viable.size(); ++e)
        viable[e] = static_cast<int>(search.pair_cands_[e].size());
      for (size_t e = 0; e < pair_count.size(); ++e)
        if (p.pair_target[e] == 0) block_all(search.pair_cands_[e]);
      for (int x = 0; x < p.v; ++x)
        if (p.point_target[x] == 0) block_all(search.point_cands_[x]);
    }

    void block_all(const std::vector<int>& cands) {
      for (int c : cands)
        if (blocked[c]++ == 0)
          for (int e : s->cand_pairs_[c]) --viable[e];
    }
    void unblock_all(const std::vector<int>& cands) {
      for (int c : cands)
        if (--blocked[c] == 0)
          for (int e : s->cand_pairs_[c]) ++viable[e];
    }

    void place(int c) {
      chosen.push_back(c);
      for (int e : s->cand_pairs_[c])
        if (++pair_count[e] == s->p_.pair_target[e]) block_all(s->pair_cands_[e]);
      for (int x : s->p_.candidates[c])
        if (++point_count[x] == s->p_.point_target[x]) block_all(s->point_cands_[x]);
    }
    void unplace(int c) {
      for (int x : s->p_.candidates[c])
        if (point_count[x]-- == s->p_.point_target[x]) unblock_all(s->point_cands_[x]);
      for (int e : s->cand_pairs_[c])
        if (pair_count[e]-- == s->p_.pair_target[e]) unblock_all(s->pair_cands_[e]);
      chosen.pop_back();
    }

    // Returns the deficient pair with the fewest viable candidates, -1 when all
    // pairs are satisfied, -2 when some deficient pair cannot be completed.
    int select_pair() const {
      const auto& p = s->p_;
      const int remaining = p.block_count - static_cast<int>(chosen.size());
      int best = -1, best_viable = std::numeric_limits<int>::max();
      for (size_t e = 0; e < pair_count.size(); ++e) {
        const int deficit = p.pair_target[e] - pair_count[e];
        if (deficit <= 0) continue;
        if (viable[e] == 0) return -2;
        if (p.use_pair_residual_bound && deficit > remaining) return -2;
        if (viable[e] < best_viable) {
          best_viable = viable[e];
          best = static_cast<int>(e);
        }
      }
      return best;
    }

    bool points_feasible() const {
      if (!s->p_.use_pair_residual_bound) return true;
      const int remaining = s->p_.block_count - static_cast<int>(chosen.size());
      for (int x = 0; x < s->p_.v; ++x)
        if (s->p_.point_target[x] - point_count[x] > remaining) return false;
      return true;
    }

    std::vector<int> branches(int e) const {
      std::vector<int> out;
      for (int c : s->pair_cands_[e])
        if (blocked[c] == 0 && c >= last_for_pair[e]) out.push_back(c);
      return out;
    }

    bool dfs(int depth, bool root_level) {
      PairCoverSearch* self = s;
      if (self->stop_.load(std::memory_order_relaxed)) return false;
      if (self->nodes_.fetch_add(1, std::memory_order_relaxed) >= s->p_.budget) {
        self->budget_hit_ = true;
        self->stop_ = true;
        return false;
      }
      max_depth = std::max(max_depth, depth);
      const auto& p = s->p_;
      if (static_cast<int>(chosen.size()) == p.block_count) return select_pair() == -1;
      if (!points_feasible()) return false;

      int e;
      std::vector<int> options;
      if (root_level && p.root_pair) {
        e = *p.root_pair;
        for (int c : p.root_choices)
          if (blocked[c] == 0) options.push_back(c);
      } else {
        e = select_pair();
        if (e == -2) return false;
        if (e == -1) return false;  // pairs complete but block budget left over
        options = branches(e);
      }
      for (int c : options) {
        const int saved = last_for_pair[e];
        last_for_pair[e] = c;
        place(c);
        if (dfs(depth + 1, false)) return true;
        unplace(c);
        last_for_pair[e] = saved;
        if (self->stop_.load(std::memory_order_relaxed)) return false;
      }
      return false;
    }
  };

  CoverKind outcome_without_witness() const {
    return budget_hit_ ? CoverKind::BudgetExhausted : CoverKind::Exhausted;
  }

  PairCoverResult run_parallel(State& root) {
    PairCoverResult result;
    int e;
    std::vector<int> options;
    if (p_.root_pair) {
      e = *p_.root_pair;
      for (int c : p_.root_choices)
        if (root.blocked[c] == 0) options.push_back(c);
    } else {
      e = root.select_pair();
      if (e < 0) {
        result.kind = (e == -1 && static_cast<int>(root.chosen.size()) == p_.block_count)
                          ? CoverKind::Found
                          : CoverKind::Exhausted;
        if (result.kind == CoverKind::Found) result.chosen = root.chosen;
        return result;
      }
      options = root.branches(e);
    }
    std::atomic<size_t> next{0};
    std::mutex mu;
    std::optional<std::vector<int>> found;
    int max_depth = 0;
    auto worker = [&] {
      State local = root;
      while (!stop_) {
        const size_t i = next.fetch_add(1);
        if (i >= options.size()) break;
        const int c = options[i];
        const int saved = local.last_for_pair[e];
        local.last_for_pair[e] = c;
        local.place(c);
        if (local.dfs(1, false)) {
          std::lock_guard lock(mu);
          if (!found) found = local.chosen;
          stop_ = true;
        }
        local.unplace(c);
        local.last_for_pair[e] = saved;
      }
      std::lock_guard lock(mu);
      max_depth = std::max(max_depth, local.max_depth);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < p_.threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    result.max_depth = max_depth;
    if (found) {
      result.kind = CoverKind::Found;
      result.chosen = *found;
    } else {
      result.kind = outcome_without_witness();
    }
    return result;
  }

  const PairCoverProblem& p_;
  std::vector<std::vector<int>> pair_cands_;
  std::vector<std::vector<int>> point_cands_;
  std::vector<std::vector<int>> cand_pairs_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
  std::atomic<bool> budget_hit_{false};
};

}  // namespace gdd6::detail
