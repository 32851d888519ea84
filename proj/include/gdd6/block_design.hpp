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

// Ingredient designs on a single point set {0,...,n-1}: BIBDs, their
// resolutions into alpha-parallel classes, near-resolutions and
// 1-factorizations. Every factory validates by exhaustive pair counting.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gdd6/detail/combinatorics.hpp"
#include "gdd6/error.hpp"

namespace gdd6 {

using Blocks = std::vector<std::vector<int>>;

struct BlockDesign {
  int n = 0;
  int k = 0;
  int lambda = 0;
  Blocks blocks;

  std::int64_t b() const { return static_cast<std::int64_t>(blocks.size()); }
  int r() const { return lambda * (n - 1) / (k - 1); }
  bool operator==(const BlockDesign&) const = default;
};

namespace detail {

inline std::vector<int> point_pair_counts(int n, const Blocks& blocks) {
  std::vector<int> counts(static_cast<size_t>(n) * (n - 1) / 2, 0);
  for (const auto& block : blocks)
    for (size_t i = 0; i < block.size(); ++i)
      for (size_t j = i + 1; j < block.size(); ++j) ++counts[pair_index(block[i], block[j], n)];
  return counts;
}

inline void check_shapes(int n, int k, const Blocks& blocks) {
  for (size_t i = 0; i < blocks.size(); ++i) {
    const auto& block = blocks[i];
    if (static_cast<int>(block.size()) != k)
      throw Error(ErrorKind::InvalidIngredient,
                  "block #" + std::to_string(i) + " has " + std::to_string(block.size()) +
                      " points, expected " + std::to_string(k));
    for (size_t j = 0; j < block.size(); ++j) {
      if (block[j] < 0 || block[j] >= n)
        throw Error(ErrorKind::InvalidIngredient,
                    "block #" + std::to_string(i) + " has point " + std::to_string(block[j]) +
                        " outside [0," + std::to_string(n) + ")");
      if (j > 0 && block[j] <= block[j - 1])
        throw Error(ErrorKind::InvalidIngredient,
                    "block #" + std::to_string(i) + " is not a strictly increasing point list");
    }
  }
}

inline std::vector<int> sorted(std::vector<int> block) {
  std::sort(block.begin(), block.end());
  return block;
}

}  // namespace detail

// Validates that every pair lies in exactly lambda blocks.
inline BlockDesign make_block_design(int n, int k, int lambda, Blocks blocks) {
  if (k < 2 || k > n) throw Error(ErrorKind::InvalidIngredient, "block size outside [2,n]");
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  detail::check_shapes(n, k, blocks);
  const auto counts = detail::point_pair_counts(n, blocks);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (const int c = counts[detail::pair_index(p, q, n)]; c != lambda)
        throw Error(ErrorKind::NotBalanced, "pair {" + std::to_string(p) + "," + std::to_string(q) +
                                                "} occurs " + std::to_string(c) + " times, expected " +
                                                std::to_string(lambda));
  std::sort(blocks.begin(), blocks.end());
  return {n, k, lambda, std::move(blocks)};
}

// Same, with the index read off the pair {0,1}.
inline BlockDesign make_block_design(int n, int k, Blocks blocks) {
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  detail::check_shapes(n, k, blocks);
  const int lambda = n >= 2 ? detail::point_pair_counts(n, blocks)[0] : 0;
  return make_block_design(n, k, lambda, std::move(blocks));
}

struct Resolution {
  BlockDesign design;
  int alpha = 1;
  std::vector<std::vector<int>> classes;  // indices into design.blocks

  int class_count() const { return static_cast<int>(classes.size()); }
  int class_size() const { return classes.empty() ? 0 : static_cast<int>(classes.front().size()); }
  Blocks class_blocks(int j) const {
    Blocks out;
    for (int i : classes[j]) out.push_back(design.blocks[i]);
    return out;
  }
};

inline void validate_resolution(const Resolution& res) {
  const auto& d = res.design;
  const std::int64_t cls_num = static_cast<std::int64_t>(d.lambda) * (d.n - 1);
  const std::int64_t cls_den = static_cast<std::int64_t>(d.k - 1) * res.alpha;
  if (res.alpha < 1 || cls_num % cls_den != 0 || (static_cast<std::int64_t>(d.n) * res.alpha) % d.k != 0)
    throw Error(ErrorKind::InvalidIngredient, "parameters admit no alpha-resolution");
  const int s = static_cast<int>(cls_num / cls_den);
  const int t = d.n * res.alpha / d.k;
  if (res.class_count() != s)
    throw Error(ErrorKind::InvalidIngredient, "resolution has " + std::to_string(res.class_count()) +
                                                  " classes, expected " + std::to_string(s));
  std::vector<int> seen(d.blocks.size(), 0);
  for (int j = 0; j < s; ++j) {
    if (static_cast<int>(res.classes[j].size()) != t)
      throw Error(ErrorKind::InvalidIngredient, "class " + std::to_string(j) + " has " +
                                                    std::to_string(res.classes[j].size()) +
                                                    " blocks, expected " + std::to_string(t));
    std::vector<int> cover(d.n, 0);
    for (int i : res.classes[j]) {
      if (i < 0 || i >= static_cast<int>(d.blocks.size()) || seen[i]++)
        throw Error(ErrorKind::InvalidIngredient, "classes do not partition the blocks");
      for (int x : d.blocks[i]) ++cover[x];
    }
    for (int x = 0; x < d.n; ++x)
      if (cover[x] != res.alpha)
        throw Error(ErrorKind::InvalidIngredient, "class " + std::to_string(j) + " covers point " +
                                                      std::to_string(x) + " " + std::to_string(cover[x]) +
                                                      " times, expected " + std::to_string(res.alpha));
  }
}

// Builds and validates a resolution from explicit class block lists. Blocks are
// stored class by class; classes are sorted by their least block.
inline Resolution make_resolution(int n, int k, int lambda, int alpha, std::vector<Blocks> classes) {
  for (auto& cls : classes) {
    for (auto& block : cls) std::sort(block.begin(), block.end());
    std::sort(cls.begin(), cls.end());
  }
  std::sort(classes.begin(), classes.end());
  Blocks all;
  for (const auto& cls : classes) all.insert(all.end(), cls.begin(), cls.end());
  // Validate balance without reordering the class-major block list.
  const BlockDesign checked = make_block_design(n, k, lambda, all);
  Resolution res{{checked.n, checked.k, checked.lambda, std::move(all)}, alpha, {}};
  int next = 0;
  for (const auto& cls : classes) {
    std::vector<int> idx(cls.size());
    for (auto& i : idx) i = next++;
    res.classes.push_back(std::move(idx));
  }
  validate_resolution(res);
  return res;
}

struct NearResolution {
  BlockDesign design;
  std::vector<std::vector<int>> classes;  // class i misses point i

  Blocks class_blocks(int j) const {
    Blocks out;
    for (int i : classes[j]) out.push_back(design.blocks[i]);
    return out;
  }
};

inline void validate_near_resolution(const NearResolution& nr) {
  const auto& d = nr.design;
  if (d.lambda != d.k - 1 || (d.n - 1) % d.k != 0)
    throw Error(ErrorKind::InvalidIngredient, "near-resolution needs lambda = k-1 and n = 1 mod k");
  if (static_cast<int>(nr.classes.size()) != d.n)
    throw Error(ErrorKind::InvalidIngredient, "near-resolution needs n classes");
  std::vector<int> seen(d.blocks.size(), 0);
  for (int i = 0; i < d.n; ++i) {
    if (static_cast<int>(nr.classes[i].size()) != (d.n - 1) / d.k)
      throw Error(ErrorKind::InvalidIngredient, "class " + std::to_string(i) + " has the wrong size");
    std::vector<int> cover(d.n, 0);
    for (int b : nr.classes[i]) {
      if (b < 0 || b >= static_cast<int>(d.blocks.size()) || seen[b]++)
        throw Error(ErrorKind::InvalidIngredient, "classes do not partition the blocks");
      for (int x : d.blocks[b]) ++cover[x];
    }
    for (int x = 0; x < d.n; ++x)
      if (cover[x] != (x == i ? 0 : 1))
        throw Error(ErrorKind::InvalidIngredient,
                    "class " + std::to_string(i) + " is not a near-parallel class missing " + std::to_string(i));
  }
}

inline NearResolution make_near_resolution(int n, int k, std::vector<Blocks> classes) {
  Blocks all;
  for (auto& cls : classes)
    for (auto& block : cls) {
      std::sort(block.begin(), block.end());
      all.push_back(block);
    }
  const BlockDesign checked = make_block_design(n, k, k - 1, all);
  NearResolution nr{{checked.n, checked.k, checked.lambda, std::move(all)}, {}};
  int next = 0;
  for (const auto& cls : classes) {
    std::vector<int> idx(cls.size());
    for (auto& i : idx) i = next++;
    nr.classes.push_back(std::move(idx));
  }
  validate_near_resolution(nr);
  return nr;
}

using Edge = std::pair<int, int>;

struct OneFactorization {
  int n = 0;
  std::vector<std::vector<Edge>> factors;
};

inline void validate_one_factorization(const OneFactorization& f) {
  if (f.n < 2 || f.n % 2 != 0 || static_cast<int>(f.factors.size()) != f.n - 1)
    throw Error(ErrorKind::InvalidIngredient, "1-factorization needs n-1 factors on even n");
  std::vector<int> pairs(static_cast<size_t>(f.n) * (f.n - 1) / 2, 0);
  for (size_t j = 0; j < f.factors.size(); ++j) {
    std::vector<int> cover(f.n, 0);
    for (auto [a, b] : f.factors[j]) {
      if (a == b || a < 0 || b < 0 || a >= f.n || b >= f.n)
        throw Error(ErrorKind::InvalidIngredient, "bad edge in factor " + std::to_string(j));
      ++cover[a];
      ++cover[b];
      ++pairs[detail::pair_index(a, b, f.n)];
    }
    for (int c : cover)
      if (c != 1) throw Error(ErrorKind::InvalidIngredient, "factor " + std::to_string(j) + " is not a perfect matching");
  }
  for (int c : pairs)
    if (c != 1) throw Error(ErrorKind::InvalidIngredient, "some edge is not covered exactly once");
}

// Round-robin: point n-1 sits at the centre, the others rotate.
inline OneFactorization one_factorization(int n) {
  if (n < 2 || n % 2 != 0)
    throw Error(ErrorKind::UnsupportedN, "1-factorization needs even n >= 2, got " + std::to_string(n));
  const int m = n - 1;
  OneFactorization f{n, {}};
  for (int i = 0; i < m; ++i) {
    std::vector<Edge> factor{{std::min(i, m), std::max(i, m)}};
    for (int j = 1; j <= (n - 2) / 2; ++j) {
      const int a = ((i - j) % m + m) % m;
      const int b = (i + j) % m;
      factor.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(factor.begin(), factor.end());
    f.factors.push_back(std::move(factor));
  }
  validate_one_factorization(f);
  return f;
}

inline BlockDesign complete_design(int n, int k) {
  if (k < 2 || k > n) throw Error(ErrorKind::UnsupportedN, "complete design needs 2 <= k <= n");
  return make_block_design(n, k, static_cast<int>(detail::binomial(n - 2, k - 2)),
                           detail::combinations(n, k));
}

// The complement's index is recounted, never derived from a formula.
inline BlockDesign complement_design(const BlockDesign& d) {
  const int k = d.n - d.k;
  if (k < 2)
    throw Error(ErrorKind::InvalidIngredient,
                "complement blocks would have " + std::to_string(k) + " points");
  Blocks blocks;
  blocks.reserve(d.blocks.size());
  for (const auto& block : d.blocks) {
    std::vector<int> rest;
    for (int x = 0, i = 0; x < d.n; ++x) {
      if (i < static_cast<int>(block.size()) && block[i] == x) ++i;
      else rest.push_back(x);
    }
    blocks.push_back(std::move(rest));
  }
  return make_block_design(d.n, k, std::move(blocks));
}

// Steiner triple system on n = 1, 3 (mod 6) points.
inline BlockDesign sts(int n) {
  if (n == 3) return make_block_design(3, 3, 1, {{0, 1, 2}});
  if (n < 7 || (n % 6 != 1 && n % 6 != 3))
    throw Error(ErrorKind::UnsupportedN, "no Steiner triple system on " + std::to_string(n) + " points");
  Blocks blocks;
  if (n % 6 == 3) {
    // Bose: idempotent commutative quasigroup x*y = (x+y)/2 on Z_m, m = n/3.
    const int m = n / 3;
    auto pt = [m](int x, int i) { return x + m * (i % 3); };
    auto op = [m](int x, int y) { return ((x + y) * ((m + 1) / 2)) % m; };
    for (int x = 0; x < m; ++x) blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y)
        for (int i = 0; i < 3; ++i) blocks.push_back({pt(x, i), pt(y, i), pt(op(x, y), i + 1)});
  } else {
    // Skolem: half-idempotent commutative quasigroup on Z_{2v}, plus infinity.
    const int v = (n - 1) / 6;
    const int m = 2 * v;
    const int inf = 3 * m;
    auto pt = [m](int x, int i) { return x + m * (i % 3); };
    auto halve = [m](int z) { return z % 2 == 0 ? z / 2 : (z + m - 1) / 2; };
    auto op = [&](int x, int y) { return halve((x + y) % m); };
    for (int x = 0; x < v; ++x) blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
    for (int x = 0; x < v; ++x)
      for (int i = 0; i < 3; ++i) blocks.push_back({inf, pt(x + v, i), pt(x, i + 1)});
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y)
        for (int i = 0; i < 3; ++i) blocks.push_back({pt(x, i), pt(y, i), pt(op(x, y), i + 1)});
  }
  return make_block_design(n, 3, 1, std::move(blocks));
}

// Lines of the affine plane over GF(4): 16 points (x,y) -> 4x+y, five
// parallel classes (four slopes and the verticals).
inline Resolution affine_rbibd16() {
  // GF(4) = {0, 1, w, w+1} encoded 0..3; addition is XOR.
  static constexpr std::array<std::array<int, 4>, 4> mul{{
      {0, 0, 0, 0},
      {0, 1, 2, 3},
      {0, 2, 3, 1},
      {0, 3, 1, 2},
  }};
  std::vector<Blocks> classes;
  for (int slope = 0; slope < 4; ++slope) {
    Blocks cls;
    for (int c = 0; c < 4; ++c) {
      std::vector<int> line;
      for (int x = 0; x < 4; ++x) line.push_back(4 * x + (mul[slope][x] ^ c));
      cls.push_back(line);
    }
    classes.push_back(cls);
  }
  Blocks verticals;
  for (int c = 0; c < 4; ++c) verticals.push_back({4 * c, 4 * c + 1, 4 * c + 2, 4 * c + 3});
  classes.push_back(verticals);
  return make_resolution(16, 4, 1, 1, std::move(classes));
}

}  // namespace gdd6
