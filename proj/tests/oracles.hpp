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

// Independent reference implementations used to cross-check the library.
// Nothing here calls library code beyond reading plain fields.

#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gdd6/design.hpp"

namespace oracle {

struct Counts {
  std::map<std::pair<int, int>, int> pairs;  // every pair of distinct flat points, zero included
  std::vector<int> replication;
  std::set<std::pair<int, int>> shapes;      // (points in A, points in B) per block
  bool simple_blocks = true;                 // no repeated point inside a block
};

inline Counts count(const gdd6::GroupedDesign& d) {
  Counts c;
  const int v = 2 * d.n;
  for (int p = 0; p < v; ++p)
    for (int q = p + 1; q < v; ++q) c.pairs[{p, q}] = 0;
  c.replication.assign(v, 0);
  for (const auto& block : d.blocks) {
    std::vector<int> flat;
    int in_a = 0;
    for (const auto& pt : block.points) {
      const bool a = pt.group == gdd6::Group::A;
      in_a += a;
      flat.push_back(a ? pt.offset : d.n + pt.offset);
    }
    c.shapes.insert({in_a, static_cast<int>(flat.size()) - in_a});
    for (size_t i = 0; i < flat.size(); ++i) {
      c.replication[flat[i]] += 1;
      for (size_t j = 0; j < flat.size(); ++j) {
        if (i == j) continue;
        if (flat[i] == flat[j]) c.simple_blocks = false;
        if (flat[i] < flat[j]) c.pairs[{flat[i], flat[j]}] += 1;
      }
    }
  }
  return c;
}

// GDD(n,2,k;l1,l2) check straight from the definition.
inline bool is_gdd(const gdd6::GroupedDesign& d, int l1, int l2, std::optional<std::pair<int, int>> shape = {}) {
  const Counts c = count(d);
  if (!c.simple_blocks) return false;
  for (const auto& block : d.blocks) {
    if (static_cast<int>(block.points.size()) != d.k) return false;
    for (const auto& pt : block.points)
      if (pt.offset < 0 || pt.offset >= d.n) return false;
  }
  for (const auto& [pq, m] : c.pairs) {
    const bool same = (pq.first < d.n) == (pq.second < d.n);
    if (m != (same ? l1 : l2)) return false;
  }
  if (shape)
    for (const auto& sh : c.shapes)
      if (sh != *shape && sh != std::pair{shape->second, shape->first}) return false;
  return true;
}

inline std::pair<int, int> shape_of(int s) { return {s, 6 - s}; }

// Smallest block count consistent with the pair counting identities for a
// fixed split (s, 6-s): b*beta same-group pairs, b*(15-beta) cross pairs,
// 6b point incidences, and an even count when s != t.
inline std::pair<int, int> minimal_by_block_count(int s, int n) {
  const int t = 6 - s;
  const int beta = s * (s - 1) / 2 + t * (t - 1) / 2;
  for (std::int64_t b = 1;; ++b) {
    if (s != t && b % 2) continue;
    if ((b * beta) % (static_cast<std::int64_t>(n) * (n - 1))) continue;
    if ((b * (15 - beta)) % (static_cast<std::int64_t>(n) * n)) continue;
    if ((6 * b) % (2 * n)) continue;
    return {static_cast<int>(b * beta / (static_cast<std::int64_t>(n) * (n - 1))),
            static_cast<int>(b * (15 - beta) / (static_cast<std::int64_t>(n) * n))};
  }
}

// Plain DFS: always extends the first deficient pair in lexicographic order,
// taking candidates for that pair in non-decreasing order, and prunes only on
// pair overflow. Returns the block count of a witness, or nullopt when none
// exists.
class NaiveSearch {
 public:
  NaiveSearch(int n, int s, int l1, int l2) : n_(n), l1_(l1), l2_(l2) {
    const int t = 6 - s;
    add_candidates(subsets(n, s), subsets(n, t));
    if (s != t) add_candidates(subsets(n, t), subsets(n, s));
    const std::int64_t total = static_cast<std::int64_t>(l1) * n * (n - 1) + static_cast<std::int64_t>(l2) * n * n;
    blocks_ = total % 15 ? -1 : static_cast<int>(total / 15);
    const int v = 2 * n;
    counts_.assign(v * v, 0);
    last_.assign(v * v, 0);
    containing_.assign(v * v, {});
    for (size_t c = 0; c < cands_.size(); ++c)
      for (size_t i = 0; i < cands_[c].size(); ++i)
        for (size_t j = i + 1; j < cands_[c].size(); ++j) containing_[key(cands_[c][i], cands_[c][j])].push_back(c);
  }

  std::optional<int> run() {
    if (blocks_ < 0) return std::nullopt;
    if (dfs(0)) return blocks_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask)
      if (__builtin_popcount(mask) == k) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) s.push_back(i);
        out.push_back(s);
      }
    return out;
  }

  // Blocks with x on group A and y on group B.
  void add_candidates(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
    for (const auto& x : a)
      for (const auto& y : b) {
        std::vector<int> flat;
        for (int p : x) flat.push_back(p);
        for (int q : y) flat.push_back(n_ + q);
        cands_.push_back(flat);
      }
  }

  int key(int p, int q) const { return p * 2 * n_ + q; }
  int target(int p, int q) const { return (p < n_) == (q < n_) ? l1_ : l2_; }

  bool apply(size_t c, int delta) {
    bool ok = true;
    const auto& blk = cands_[c];
    for (size_t i = 0; i < blk.size(); ++i)
      for (size_t j = i + 1; j < blk.size(); ++j) {
        int& m = counts_[key(blk[i], blk[j])];
        m += delta;
        if (m > target(blk[i], blk[j])) ok = false;
      }
    return ok;
  }

  bool dfs(int placed) {
    ++nodes_;
    int first = -1;
    for (int p = 0; p < 2 * n_ && first < 0; ++p)
      for (int q = p + 1; q < 2 * n_; ++q)
        if (counts_[key(p, q)] < target(p, q)) {
          first = key(p, q);
          break;
        }
    if (first < 0) return placed == blocks_;
    if (placed == blocks_) return false;
    const size_t saved = last_[first];
    for (size_t c : containing_[first]) {
      if (c < saved) continue;
      const bool ok = apply(c, 1);
      last_[first] = c;
      if (ok && dfs(placed + 1)) return true;
      apply(c, -1);
    }
    last_[first] = saved;
    return false;
  }

  int n_, l1_, l2_;
  int blocks_ = 0;
  std::vector<std::vector<int>> cands_;
  std::vector<std::vector<size_t>> containing_;
  std::vector<int> counts_;
  std::vector<size_t> last_;
  std::uint64_t nodes_ = 0;
};

// Every pair of 0..v-1 appears in exactly lambda of the blocks.
inline bool is_bibd(int v, int k, int lambda, const std::vector<std::vector<int>>& blocks) {
  std::map<std::pair<int, int>, int> pairs;
  for (const auto& b : blocks) {
    if (static_cast<int>(b.size()) != k) return false;
    if (std::set<int>(b.begin(), b.end()).size() != b.size()) return false;
    for (int x : b)
      if (x < 0 || x >= v) return false;
    for (int x : b)
      for (int y : b)
        if (x < y) pairs[{x, y}] += 1;
  }
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y)
      if (pairs[{x, y}] != lambda) return false;
  return true;
}

// Each class covers every point of 0..v-1 exactly alpha times.
inline bool is_alpha_parallel(int v, int alpha, const std::vector<std::vector<int>>& cls) {
  std::vector<int> hits(v, 0);
  for (const auto& b : cls)
    for (int x : b) hits[x] += 1;
  return std::all_of(hits.begin(), hits.end(), [&](int h) { return h == alpha; });
}

}  // namespace oracle
