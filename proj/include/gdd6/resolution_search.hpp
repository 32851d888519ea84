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

// Searches that produce ingredient designs: alpha-resolutions by class-slot
// exact cover, cyclic difference families, cyclic near-resolutions and plain
// BIBDs. Every result goes through the validating factories.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdd6/block_design.hpp"
#include "gdd6/budget.hpp"
#include "gdd6/detail/combinatorics.hpp"
#include "gdd6/detail/pair_cover.hpp"
#include "gdd6/error.hpp"

namespace gdd6 {

// Necessary conditions for an alpha-resolvable BIBD(n,k,lambda).
inline bool alpha_resolution_admissible(int n, int k, int lambda, int alpha) {
  if (n < k || k < 2 || lambda < 1 || alpha < 1) return false;
  const std::int64_t l = lambda;
  return (l * (n - 1)) % (static_cast<std::int64_t>(k - 1) * alpha) == 0 &&
         (l * n * (n - 1)) % (static_cast<std::int64_t>(k) * (k - 1)) == 0 &&
         (static_cast<std::int64_t>(alpha) * n) % k == 0;
}

namespace detail {

inline std::string params_text(int n, int k, int lambda) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(lambda) + ")";
}

[[noreturn]] inline void throw_search_failure(bool budget_hit, const std::string& what) {
  if (budget_hit) throw Error(ErrorKind::BudgetExhausted, what + ": search budget exhausted");
  throw Error(ErrorKind::NotFound, what + ": search space exhausted, none exists");
}

// Builds alpha-parallel classes one at a time. A class grows by covering its
// smallest deficient point; blocks chosen for the same point are taken in
// non-decreasing candidate order.
class ResolutionSearch {
 public:
  // supply[c] < 0 means candidate c may be used any number of times.
  ResolutionSearch(int n, int k, int lambda, int alpha, Blocks candidates, std::vector<int> supply,
                   bool force_first_unused, std::uint64_t budget)
      : n_(n), k_(k), lambda_(lambda), alpha_(alpha), cands_(std::move(candidates)),
        supply_(std::move(supply)), force_first_unused_(force_first_unused), budget_(budget) {
    s_ = static_cast<int>(static_cast<std::int64_t>(lambda) * (n - 1) / ((k - 1) * alpha));
    t_ = n * alpha / k;
    by_point_.assign(n, {});
    cand_pairs_.resize(cands_.size());
    for (int c = 0; c < static_cast<int>(cands_.size()); ++c) {
      const auto& block = cands_[c];
      for (int x : block) by_point_[x].push_back(c);
      for (size_t i = 0; i < block.size(); ++i)
        for (size_t j = i + 1; j < block.size(); ++j) cand_pairs_[c].push_back(pair_index(block[i], block[j], n));
    }
    pair_count_.assign(static_cast<size_t>(n) * (n - 1) / 2, 0);
    cover_.assign(n, 0);
    used_.assign(cands_.size(), 0);
  }

  std::optional<std::vector<Blocks>> run() {
    nodes_ = 0;
    budget_hit_ = false;
    if (grow(0, -1, -1)) {
      std::vector<Blocks> out;
      for (const auto& cls : classes_) {
        Blocks blocks;
        for (int c : cls) blocks.push_back(cands_[c]);
        out.push_back(std::move(blocks));
      }
      return out;
    }
    return std::nullopt;
  }

  bool budget_hit() const { return budget_hit_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool fits(int c) const {
    if (supply_[c] >= 0 && used_[c] >= supply_[c]) return false;
    for (int x : cands_[c])
      if (cover_[x] >= alpha_) return false;
    for (int e : cand_pairs_[c])
      if (pair_count_[e] >= lambda_) return false;
    return true;
  }
  void put(int c) {
    ++used_[c];
    for (int x : cands_[c]) ++cover_[x];
    for (int e : cand_pairs_[c]) ++pair_count_[e];
    current_.push_back(c);
  }
  void take(int c) {
    --used_[c];
    for (int x : cands_[c]) --cover_[x];
    for (int e : cand_pairs_[c]) --pair_count_[e];
    current_.pop_back();
  }

  bool deficits_reachable(int remaining) const {
    const int cap = alpha_ * remaining;
    for (int c : pair_count_)
      if (lambda_ - c > cap) return false;
    return true;
  }

  // last_p / last_c: point and candidate of the previous choice in this class.
  bool grow(int class_key, int last_p, int last_c) {
    if (++nodes_ > budget_) {
      budget_hit_ = true;
      return false;
    }
    if (static_cast<int>(current_.size()) == t_) return close_class(class_key);

    if (current_.empty() && force_first_unused_) {
      int first = -1;
      for (int c = 0; c < static_cast<int>(cands_.size()); ++c)
        if (used_[c] < supply_[c]) {
          first = c;
          break;
        }
      if (first < 0 || !fits(first)) return false;
      put(first);
      const bool ok = grow(first, -1, -1);
      take(first);
      return ok;
    }

    int p = 0;
    while (p < n_ && cover_[p] >= alpha_) ++p;
    if (p == n_) return false;
    int floor_c = -1;
    if (p == last_p) floor_c = last_c;
    if (current_.empty()) floor_c = class_key;  // classes in non-decreasing key order
    for (int c : by_point_[p]) {
      if (c < floor_c || !fits(c)) continue;
      put(c);
      const bool ok = grow(current_.size() == 1 && !force_first_unused_ ? c : class_key, p, c);
      if (ok) return true;
      take(c);
      if (budget_hit_) return false;
    }
    return false;
  }

  bool close_class(int class_key) {
    const int remaining = s_ - static_cast<int>(classes_.size()) - 1;
    if (!deficits_reachable(remaining)) return false;
    classes_.push_back(current_);
    if (remaining == 0) return true;
    std::vector<int> saved;
    saved.swap(current_);
    std::fill(cover_.begin(), cover_.end(), 0);
    const bool ok = grow(class_key, -1, -1);
    if (ok) return true;
    std::fill(cover_.begin(), cover_.end(), alpha_);
    current_.swap(saved);
    classes_.pop_back();
    return false;
  }

  int n_, k_, lambda_, alpha_, s_ = 0, t_ = 0;
  Blocks cands_;
  std::vector<int> supply_;
  bool force_first_unused_;
  std::uint64_t budget_;
  std::vector<std::vector<int>> by_point_, cand_pairs_;
  std::vector<int> pair_count_, cover_, used_;
  std::vector<int> current_;
  std::vector<std::vector<int>> classes_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

inline void require_admissible(int n, int k, int lambda, int alpha) {
  if (!alpha_resolution_admissible(n, k, lambda, alpha))
    throw Error(ErrorKind::InfeasibleParameters,
                "no " + std::to_string(alpha) + "-resolution can exist for BIBD" + params_text(n, k, lambda));
}

}  // namespace detail

// Partitions the blocks of d into alpha-parallel classes.
inline Resolution resolve(const BlockDesign& d, int alpha, std::uint64_t budget = default_search_budget()) {
  detail::require_admissible(d.n, d.k, d.lambda, alpha);
  Blocks distinct;
  std::vector<int> supply;
  for (const auto& block : d.blocks) {
    if (!distinct.empty() && distinct.back() == block) {
      ++supply.back();
    } else {
      distinct.push_back(block);
      supply.push_back(1);
    }
  }
  detail::ResolutionSearch search(d.n, d.k, d.lambda, alpha, distinct, supply, true, budget);
  auto classes = search.run();
  if (!classes)
    detail::throw_search_failure(search.budget_hit(), std::to_string(alpha) + "-resolution of BIBD" +
                                                          detail::params_text(d.n, d.k, d.lambda));
  return make_resolution(d.n, d.k, d.lambda, alpha, std::move(*classes));
}

// Searches directly for an alpha-resolvable BIBD(n,k,lambda).
inline Resolution find_resolvable(int n, int k, int lambda, int alpha,
                                  std::uint64_t budget = default_search_budget()) {
  detail::require_admissible(n, k, lambda, alpha);
  Blocks cands = detail::combinations(n, k);
  std::vector<int> supply(cands.size(), -1);
  detail::ResolutionSearch search(n, k, lambda, alpha, std::move(cands), std::move(supply), false, budget);
  auto classes = search.run();
  if (!classes)
    detail::throw_search_failure(search.budget_hit(), std::to_string(alpha) + "-resolvable BIBD" +
                                                          detail::params_text(n, k, lambda));
  return make_resolution(n, k, lambda, alpha, std::move(*classes));
}

inline Blocks develop(const std::vector<int>& base, int n) {
  Blocks orbit;
  for (int i = 0; i < n; ++i) {
    std::vector<int> block;
    for (int x : base) block.push_back((x + i) % n);
    std::sort(block.begin(), block.end());
    orbit.push_back(std::move(block));
  }
  return orbit;
}

namespace detail {

// Unordered difference classes 1..n/2; the class n/2 (n even) is hit twice
// per development of a pair, so its target is halved.
inline int difference_class(int a, int b, int n) {
  const int d = ((b - a) % n + n) % n;
  return std::min(d, n - d);
}

inline bool full_orbit(const std::vector<int>& block, int n) {
  for (int shift = 1; shift < n; ++shift) {
    if (n % shift != 0) continue;  // a stabilizer is a subgroup, generated by a divisor
    std::vector<int> moved;
    for (int x : block) moved.push_back((x + shift) % n);
    std::sort(moved.begin(), moved.end());
    if (moved == block) return false;
  }
  return true;
}

class DifferenceSearch {
 public:
  DifferenceSearch(int n, int lambda, Blocks cands, std::uint64_t budget)
      : n_(n), cands_(std::move(cands)), budget_(budget) {
    const int classes = n / 2;
    target_.assign(classes + 1, lambda);
    target_[0] = 0;
    if (n % 2 == 0) target_[classes] = lambda / 2;
    count_.assign(classes + 1, 0);
    last_.assign(classes + 1, -1);
    diffs_.resize(cands_.size());
    by_diff_.assign(classes + 1, {});
    for (int c = 0; c < static_cast<int>(cands_.size()); ++c) {
      const auto& block = cands_[c];
      for (size_t i = 0; i < block.size(); ++i)
        for (size_t j = i + 1; j < block.size(); ++j) diffs_[c].push_back(difference_class(block[i], block[j], n));
      for (int d = 1; d <= classes; ++d)
        if (std::find(diffs_[c].begin(), diffs_[c].end(), d) != diffs_[c].end()) by_diff_[d].push_back(c);
    }
  }

  std::optional<std::vector<int>> run() {
    if (dfs()) return chosen_;
    return std::nullopt;
  }
  bool budget_hit() const { return budget_hit_; }

 private:
  bool fits(int c) {
    bool ok = true;
    for (int d : diffs_[c])
      if (++count_[d] > target_[d]) ok = false;
    for (int d : diffs_[c]) --count_[d];
    return ok;
  }

  bool dfs() {
    if (++nodes_ > budget_) {
      budget_hit_ = true;
      return false;
    }
    int d = 1;
    while (d < static_cast<int>(count_.size()) && count_[d] == target_[d]) ++d;
    if (d == static_cast<int>(count_.size())) return true;
    for (int c : by_diff_[d]) {
      if (c < last_[d] || !fits(c)) continue;
      const int saved = last_[d];
      last_[d] = c;
      for (int e : diffs_[c]) ++count_[e];
      chosen_.push_back(c);
      if (dfs()) return true;
      chosen_.pop_back();
      for (int e : diffs_[c]) --count_[e];
      last_[d] = saved;
      if (budget_hit_) return false;
    }
    return false;
  }

  int n_;
  Blocks cands_;
  std::uint64_t budget_;
  std::vector<int> target_, count_, last_;
  std::vector<std::vector<int>> diffs_, by_diff_;
  std::vector<int> chosen_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

// k-subsets of Z_n containing 0 that are the least translate containing 0 and
// have trivial stabilizer.
inline Blocks orbit_representatives(int n, int k) {
  Blocks out;
  for_each_combination(n - 1, k - 1, [&](const std::vector<int>& rest) {
    std::vector<int> block{0};
    for (int x : rest) block.push_back(x + 1);
    for (int x : block) {
      std::vector<int> moved;
      for (int y : block) moved.push_back(((y - x) % n + n) % n);
      std::sort(moved.begin(), moved.end());
      if (moved < block) return;
    }
    if (full_orbit(block, n)) out.push_back(block);
  });
  return out;
}

}  // namespace detail

// Base blocks of a cyclic (n,k,lambda) difference family with full orbits.
inline Blocks cyclic_difference_family(int n, int k, int lambda, std::uint64_t budget = default_search_budget()) {
  const std::int64_t pairs = static_cast<std::int64_t>(lambda) * (n - 1);
  if (n <= k || pairs % (static_cast<std::int64_t>(k) * (k - 1)) != 0 || (n % 2 == 0 && lambda % 2 != 0))
    throw Error(ErrorKind::InfeasibleParameters,
                "no cyclic difference family with full orbits for " + detail::params_text(n, k, lambda));
  Blocks cands = detail::orbit_representatives(n, k);
  detail::DifferenceSearch search(n, lambda, cands, budget);
  auto chosen = search.run();
  if (!chosen)
    detail::throw_search_failure(search.budget_hit(), "cyclic difference family" + detail::params_text(n, k, lambda));
  Blocks base;
  for (int c : *chosen) base.push_back(cands[c]);
  std::sort(base.begin(), base.end());
  return base;
}

inline BlockDesign develop_family(const Blocks& base, int n, int k, int lambda) {
  Blocks blocks;
  for (const auto& b : base) {
    auto orbit = develop(b, n);
    blocks.insert(blocks.end(), orbit.begin(), orbit.end());
  }
  return make_block_design(n, k, lambda, std::move(blocks));
}

// Every full orbit of a k-set is a k-parallel class, so a cyclic difference
// family yields a k-resolution with one class per base block.
inline Resolution cyclic_resolution(int n, int k, int lambda, std::uint64_t budget = default_search_budget()) {
  detail::require_admissible(n, k, lambda, k);
  std::vector<Blocks> classes;
  for (const auto& b : cyclic_difference_family(n, k, lambda, budget)) classes.push_back(develop(b, n));
  return make_resolution(n, k, lambda, k, std::move(classes));
}

inline Resolution resolution_from_base(const Blocks& base, int n, int k, int lambda) {
  std::vector<Blocks> classes;
  for (const auto& b : base) classes.push_back(develop(b, n));
  return make_resolution(n, k, lambda, k, std::move(classes));
}

// NRB(n,k,k-1) whose class i is the base near-parallel class shifted by i.
inline NearResolution near_resolution_from_base(const Blocks& base_class, int n, int k) {
  std::vector<Blocks> classes;
  for (int i = 0; i < n; ++i) {
    Blocks cls;
    for (const auto& block : base_class) {
      std::vector<int> moved;
      for (int x : block) moved.push_back((x + i) % n);
      cls.push_back(std::move(moved));
    }
    classes.push_back(std::move(cls));
  }
  return make_near_resolution(n, k, std::move(classes));
}

inline NearResolution cyclic_near_resolution(int n, int k, std::uint64_t budget = default_search_budget()) {
  if (k < 2 || n <= k || (n - 1) % k != 0 || (n % 2 == 0 && (k - 1) % 2 != 0))
    throw Error(ErrorKind::UnsupportedN, "no cyclic NRB" + detail::params_text(n, k, k - 1));
  const int classes = n / 2;
  std::vector<int> target(classes + 1, k - 1), count(classes + 1, 0);
  if (n % 2 == 0) target[classes] = (k - 1) / 2;
  std::vector<int> used(n, 0);
  used[0] = 1;
  Blocks chosen;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  std::vector<int> block;

  // Partitions Z_n \ {0} into k-sets, one block at a time from the least free point.
  auto fill = [&](auto&& self, int from) -> bool {
    if (++nodes > budget) {
      budget_hit = true;
      return false;
    }
    if (block.size() == static_cast<size_t>(k)) {
      chosen.push_back(block);
      std::vector<int> saved;
      saved.swap(block);
      int p = 1;
      while (p < n && used[p]) ++p;
      bool ok = p == n;
      if (!ok) {
        used[p] = 1;
        block.push_back(p);
        ok = self(self, p + 1);
        if (!ok) {
          block.pop_back();
          used[p] = 0;
        }
      }
      if (ok) return true;
      block.swap(saved);
      chosen.pop_back();
      return false;
    }
    for (int x = from; x < n; ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (int y : block)
        if (++count[detail::difference_class(y, x, n)] > target[detail::difference_class(y, x, n)]) ok = false;
      if (ok) {
        used[x] = 1;
        block.push_back(x);
        if (self(self, x + 1)) return true;
        block.pop_back();
        used[x] = 0;
      }
      for (int y : block) --count[detail::difference_class(y, x, n)];
      if (budget_hit) return false;
    }
    return false;
  };
  used[1] = 1;
  block.push_back(1);
  if (!fill(fill, 2))
    detail::throw_search_failure(budget_hit, "cyclic NRB" + detail::params_text(n, k, k - 1));
  return near_resolution_from_base(chosen, n, k);
}

// Plain BIBD search over all k-subsets with the pair-cover engine.
inline BlockDesign bibd_search(int n, int k, int lambda, std::uint64_t budget = default_search_budget()) {
  const std::int64_t l = lambda;
  if (k < 2 || n < k || (l * (n - 1)) % (k - 1) != 0 || (l * n * (n - 1)) % (static_cast<std::int64_t>(k) * (k - 1)) != 0)
    throw Error(ErrorKind::InfeasibleParameters, "BIBD" + detail::params_text(n, k, lambda) + " is inadmissible");
  detail::PairCoverProblem problem;
  problem.v = n;
  problem.candidates = detail::combinations(n, k);
  problem.pair_target.assign(static_cast<size_t>(n) * (n - 1) / 2, lambda);
  problem.point_target.assign(n, static_cast<int>(l * (n - 1) / (k - 1)));
  problem.block_count = static_cast<int>(l * n * (n - 1) / (static_cast<std::int64_t>(k) * (k - 1)));
  problem.budget = budget;
  const auto result = detail::PairCoverSearch(problem).run();
  if (result.kind != detail::CoverKind::Found)
    detail::throw_search_failure(result.kind == detail::CoverKind::BudgetExhausted,
                                 "BIBD" + detail::params_text(n, k, lambda));
  Blocks blocks;
  for (int c : result.chosen) blocks.push_back(problem.candidates[c]);
  return make_block_design(n, k, lambda, std::move(blocks));
}

}  // namespace gdd6
