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

// Data model for two-group divisible designs and exact verification of a
// claimed design against the GDD axioms.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdd6/detail/combinatorics.hpp"

namespace gdd6 {

enum class Group : std::uint8_t { A = 0, B = 1 };

struct Point {
  Group group = Group::A;
  int offset = 0;

  auto operator<=>(const Point&) const = default;
};

inline std::string to_string(const Point& p) {
  return (p.group == Group::A ? "A" : "B") + std::to_string(p.offset);
}

// Points are addressed as 0..n-1 for group A and n..2n-1 for group B wherever
// a flat index is needed.
inline int flat_index(const Point& p, int n) {
  return p.group == Group::A ? p.offset : n + p.offset;
}

inline Point point_from_flat(int index, int n) {
  return index < n ? Point{Group::A, index} : Point{Group::B, index - n};
}

struct Block {
  std::vector<Point> points;

  static Block from_offsets(std::span<const int> a, std::span<const int> b) {
    Block block;
    block.points.reserve(a.size() + b.size());
    for (int x : a) block.points.push_back({Group::A, x});
    for (int y : b) block.points.push_back({Group::B, y});
    std::sort(block.points.begin(), block.points.end());
    return block;
  }
  static Block from_offsets(std::initializer_list<int> a, std::initializer_list<int> b) {
    return from_offsets(std::span<const int>(a.begin(), a.size()),
                        std::span<const int>(b.begin(), b.size()));
  }

  int size() const { return static_cast<int>(points.size()); }
  int count(Group g) const {
    return static_cast<int>(std::count_if(points.begin(), points.end(),
                                          [g](const Point& p) { return p.group == g; }));
  }

  auto operator<=>(const Block&) const = default;
  bool operator==(const Block&) const = default;
};

inline std::string to_string(const Block& block);

// A multiset of blocks on two groups of n points each. Repeated blocks are
// legal and meaningful.
struct GroupedDesign {
  int n = 0;
  int k = 6;
  std::vector<Block> blocks;

  std::int64_t block_count() const { return static_cast<std::int64_t>(blocks.size()); }
  bool operator==(const GroupedDesign&) const = default;
};

// Split of every block into s points on one group and t on the other, s <= t.
struct Configuration {
  int s = 0;
  int t = 0;

  auto operator<=>(const Configuration&) const = default;
};

inline std::string to_string(const Configuration& c) {
  return std::to_string(c.s) + "," + std::to_string(c.t);
}

struct GddClaim {
  int n = 0;
  int lambda1 = 0;
  int lambda2 = 0;
  std::optional<Configuration> config;

  bool operator==(const GddClaim&) const = default;

  // Throws std::invalid_argument when the claim is not a legal GDD claim for
  // block size k.
  void validate(int k = 6) const {
    if (n < 1) throw std::invalid_argument("claim: n must be positive");
    if (lambda1 < 0 || lambda2 < 0) throw std::invalid_argument("claim: negative index");
    if (lambda1 == 0 && lambda2 == 0) throw std::invalid_argument("claim: both indices zero");
    if (config) {
      if (config->s < 1 || config->s > config->t)
        throw std::invalid_argument("claim: configuration needs 1 <= s <= t");
      if (config->s + config->t != k)
        throw std::invalid_argument("claim: configuration does not sum to block size");
    }
  }
};

enum class ViolationKind { PairCountFirst, PairCountSecond, Replication, Configuration, BlockShape };

inline std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::PairCountFirst: return "PairCountFirst";
    case ViolationKind::PairCountSecond: return "PairCountSecond";
    case ViolationKind::Replication: return "Replication";
    case ViolationKind::Configuration: return "Configuration";
    case ViolationKind::BlockShape: return "BlockShape";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::string witness;
  std::int64_t observed = 0;
  std::int64_t expected = 0;
};

struct VerificationReport {
  bool pass = false;
  std::int64_t b_observed = 0;
  std::vector<int> r_observed;  // flat point order, A0..A(n-1), B0..B(n-1)
  int r_min = 0;
  int r_max = 0;
  std::vector<Violation> violations;

  bool has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
  }
  const Violation* find(ViolationKind kind) const {
    for (const auto& v : violations)
      if (v.kind == kind) return &v;
    return nullptr;
  }
};

// Exact occurrence count of every unordered pair of the 2n points.
class PairTable {
 public:
  explicit PairTable(int n) : n_(n), counts_(static_cast<size_t>(n) * (2 * n - 1), 0) {}

  int n() const { return n_; }
  int at(int p, int q) const { return counts_[detail::pair_index(p, q, 2 * n_)]; }
  int at(const Point& p, const Point& q) const { return at(flat_index(p, n_), flat_index(q, n_)); }
  void add(int p, int q, int delta = 1) { counts_[detail::pair_index(p, q, 2 * n_)] += delta; }

 private:
  int n_;
  std::vector<int> counts_;
};

namespace detail {

inline std::string block_shape_problem(const Block& block, int n, int k) {
  if (block.size() != k)
    return "has " + std::to_string(block.size()) + " points, expected " + std::to_string(k);
  for (const auto& p : block.points)
    if (p.offset < 0 || p.offset >= n) return "point " + to_string(p) + " out of range";
  std::vector<Point> sorted = block.points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "repeated point";
  return {};
}

}  // namespace detail

inline std::string to_string(const Block& block) {
  std::string out = "{";
  for (size_t i = 0; i < block.points.size(); ++i) {
    if (i) out += ',';
    out += to_string(block.points[i]);
  }
  return out + "}";
}

// Blocks with out-of-range points are skipped; repeated points inside a block
// are counted once.
inline PairTable pair_counts(const GroupedDesign& design) {
  PairTable table(design.n);
  std::vector<int> flat;
  for (const auto& block : design.blocks) {
    flat.clear();
    bool ok = true;
    for (const auto& p : block.points) {
      if (p.offset < 0 || p.offset >= design.n) ok = false;
      else flat.push_back(flat_index(p, design.n));
    }
    if (!ok) continue;
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    for (size_t i = 0; i < flat.size(); ++i)
      for (size_t j = i + 1; j < flat.size(); ++j) table.add(flat[i], flat[j]);
  }
  return table;
}

inline VerificationReport verify_gdd(const GroupedDesign& design, const GddClaim& claim) {
  const int n = design.n;
  const int v = 2 * n;
  VerificationReport report;
  report.b_observed = design.block_count();
  report.r_observed.assign(v, 0);

  auto add = [&](ViolationKind kind, std::string witness, std::int64_t observed,
                 std::int64_t expected) {
    if (!report.has(kind)) report.violations.push_back({kind, std::move(witness), observed, expected});
  };

  if (claim.n != n)
    add(ViolationKind::BlockShape,
        "claim is for n=" + std::to_string(claim.n) + " but design has n=" + std::to_string(n),
        n, claim.n);

  for (size_t i = 0; i < design.blocks.size(); ++i) {
    const Block& block = design.blocks[i];
    if (auto problem = detail::block_shape_problem(block, n, design.k); !problem.empty()) {
      add(ViolationKind::BlockShape, "block #" + std::to_string(i) + " " + to_string(block) + " " + problem,
          block.size(), design.k);
      continue;
    }
    for (const auto& p : block.points) ++report.r_observed[flat_index(p, n)];
    if (claim.config) {
      const int a = block.count(Group::A);
      const int b = block.count(Group::B);
      if (std::min(a, b) != claim.config->s || std::max(a, b) != claim.config->t)
        add(ViolationKind::Configuration,
            "block #" + std::to_string(i) + " " + to_string(block) + " splits " + std::to_string(a) +
                "+" + std::to_string(b),
            std::min(a, b), claim.config->s);
    }
  }

  const PairTable table = pair_counts(design);
  for (int p = 0; p < v; ++p) {
    for (int q = p + 1; q < v; ++q) {
      const bool same = (p < n) == (q < n);
      const int expected = same ? claim.lambda1 : claim.lambda2;
      const int observed = table.at(p, q);
      if (observed != expected)
        add(same ? ViolationKind::PairCountFirst : ViolationKind::PairCountSecond,
            "pair {" + to_string(point_from_flat(p, n)) + "," + to_string(point_from_flat(q, n)) +
                "} occurs " + std::to_string(observed) + " times, expected " + std::to_string(expected),
            observed, expected);
    }
  }

  if (v > 0) {
    auto [lo, hi] = std::minmax_element(report.r_observed.begin(), report.r_observed.end());
    report.r_min = *lo;
    report.r_max = *hi;
    if (*lo != *hi) {
      std::map<int, int> frequency;
      for (int r : report.r_observed) ++frequency[r];
      const int mode = std::max_element(frequency.begin(), frequency.end(), [](auto& x, auto& y) {
                         return x.second < y.second;
                       })->first;
      for (int p = 0; p < v; ++p) {
        if (report.r_observed[p] != mode) {
          add(ViolationKind::Replication,
              "point " + to_string(point_from_flat(p, n)) + " occurs in " +
                  std::to_string(report.r_observed[p]) + " blocks, most points occur in " +
                  std::to_string(mode),
              report.r_observed[p], mode);
          break;
        }
      }
    }
  }

  report.pass = report.violations.empty();
  return report;
}

struct PairDiscrepancy {
  Point p;
  Point q;
  int observed = 0;
  int expected = 0;
};

// Every pair whose count differs from the claim, in flat point order.
inline std::vector<PairDiscrepancy> pair_discrepancies(const GroupedDesign& design, const GddClaim& claim) {
  const int n = design.n;
  const PairTable table = pair_counts(design);
  std::vector<PairDiscrepancy> out;
  for (int p = 0; p < 2 * n; ++p)
    for (int q = p + 1; q < 2 * n; ++q) {
      const int expected = (p < n) == (q < n) ? claim.lambda1 : claim.lambda2;
      if (const int observed = table.at(p, q); observed != expected)
        out.push_back({point_from_flat(p, n), point_from_flat(q, n), observed, expected});
    }
  return out;
}

// nullopt means Mixed (or no blocks at all).
inline std::optional<Configuration> classify_configuration(const GroupedDesign& design) {
  std::optional<Configuration> seen;
  for (const auto& block : design.blocks) {
    const int a = block.count(Group::A);
    const int b = block.count(Group::B);
    const Configuration c{std::min(a, b), std::max(a, b)};
    if (!seen) seen = c;
    else if (*seen != c) return std::nullopt;
  }
  return seen;
}

inline GroupedDesign multiply(const GroupedDesign& design, int w) {
  if (w < 1) throw std::invalid_argument("multiply: w must be at least 1");
  GroupedDesign out{design.n, design.k, {}};
  out.blocks.reserve(design.blocks.size() * w);
  for (int copy = 0; copy < w; ++copy)
    out.blocks.insert(out.blocks.end(), design.blocks.begin(), design.blocks.end());
  return out;
}

inline GroupedDesign canonicalize(GroupedDesign design) {
  for (auto& block : design.blocks) std::sort(block.points.begin(), block.points.end());
  std::sort(design.blocks.begin(), design.blocks.end());
  return design;
}

inline GroupedDesign swap_groups(const GroupedDesign& design) {
  GroupedDesign out{design.n, design.k, design.blocks};
  for (auto& block : out.blocks) {
    for (auto& p : block.points) p.group = p.group == Group::A ? Group::B : Group::A;
    std::sort(block.points.begin(), block.points.end());
  }
  return out;
}

}  // namespace gdd6
