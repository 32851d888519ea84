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

// Constructions of two-group GDDs from ingredient designs. Each operation
// verifies its own output before returning it.

#pragma once

#include <algorithm>
#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gdd6/block_design.hpp"
#include "gdd6/design.hpp"
#include "gdd6/error.hpp"
#include "gdd6/feasibility.hpp"
#include "gdd6/ingredients.hpp"

namespace gdd6 {

struct Construction {
  GroupedDesign design;
  GddClaim claim;
};

enum class Minimality { Minimal, NearMinimal, SevenTimes, FourteenTimes, Other };

inline std::string_view to_string(Minimality m) {
  switch (m) {
    case Minimality::Minimal: return "Minimal";
    case Minimality::NearMinimal: return "NearMinimal";
    case Minimality::SevenTimes: return "SevenTimes";
    case Minimality::FourteenTimes: return "FourteenTimes";
    case Minimality::Other: return "Other";
  }
  return "Other";
}

struct ConstructionRecipe {
  std::string name;
  ConfigClass config;
  int n = 0;
  IndexPair claimed;
  Minimality minimality = Minimality::Other;
  std::optional<IngredientRequest> ingredient;  // primary ingredient, if any
  std::string trace;                            // routing decision
};

struct ConstructionResult {
  GroupedDesign design;
  GddClaim claim;
  ConstructionRecipe recipe;
};

namespace detail {

inline Construction finish(GroupedDesign design, int lambda1, int lambda2, Configuration config) {
  GddClaim claim{design.n, lambda1, lambda2, config};
  design = canonicalize(std::move(design));
  const auto report = verify_gdd(design, claim);
  if (!report.pass)
    throw std::logic_error("construction failed its own verification: " + report.violations.front().witness);
  return {std::move(design), std::move(claim)};
}

inline Block join(const std::vector<int>& on_a, const std::vector<int>& on_b, bool swapped) {
  return swapped ? Block::from_offsets(on_b, on_a) : Block::from_offsets(on_a, on_b);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidIngredient, what);
}

inline int checked_int(std::int64_t num, std::int64_t den, const std::string& what) {
  require(den != 0 && num % den == 0, what + " is not an integer");
  return static_cast<int>(num / den);
}

}  // namespace detail

// All unions of a block on A with a block on B.
inline Construction product_kk(const BlockDesign& d) {
  detail::require(d.k >= 2 && d.k <= d.n, "product needs 2 <= k <= n");
  GroupedDesign out{d.n, 2 * d.k, {}};
  out.blocks.reserve(d.blocks.size() * d.blocks.size());
  for (const auto& x : d.blocks)
    for (const auto& y : d.blocks) out.blocks.push_back(Block::from_offsets(x, y));
  const int r = d.r();
  return detail::finish(std::move(out), d.lambda * static_cast<int>(d.b()), r * r, {d.k, d.k});
}

inline Construction product33(const BlockDesign& ts) {
  detail::require(ts.k == 3, "product33 needs a triple system");
  return product_kk(ts);
}

// Per class j, all unions of a class-j block on A with a class-j block on B.
inline Construction alpha33(const Resolution& res, const std::optional<Resolution>& other = std::nullopt) {
  const Resolution& second = other ? *other : res;
  const auto& d = res.design;
  detail::require(d.k == 3, "alpha33 needs a triple system");
  detail::require(second.design.n == d.n && second.design.k == 3 && second.design.lambda == d.lambda &&
                      second.alpha == res.alpha && second.class_count() == res.class_count(),
                  "alpha33 needs two resolutions with the same parameters");
  GroupedDesign out{d.n, 6, {}};
  for (int j = 0; j < res.class_count(); ++j)
    for (int x : res.classes[j])
      for (int y : second.classes[j]) out.blocks.push_back(Block::from_offsets(d.blocks[x], second.design.blocks[y]));
  const int s = res.class_count();
  const int t = res.class_size();
  return detail::finish(std::move(out), d.lambda * t, res.alpha * res.alpha * s, {3, 3});
}

// Published block list for GDD(6,2,6;4,5) with A = {0..5}, B = {a..f},
// transcribed verbatim. Block 14 repeats e where f is needed.
inline constexpr std::array<std::string_view, 20> kPublishedGdd6{
    "012abc", "012def", "013abd", "013cef", "024ace", "024bdf", "035adf", "035bce", "045aef", "045bcd",
    "125bcf", "125aed", "134bde", "134ace", "145bef", "145acd", "234cde", "234abf", "235cdf", "235abe",
};

inline GroupedDesign design_from_letters(const std::vector<std::string_view>& rows, int n) {
  GroupedDesign out{n, 6, {}};
  for (auto row : rows) {
    std::vector<int> a, b;
    for (char c : row) {
      if (c >= '0' && c <= '9') a.push_back(c - '0');
      else b.push_back(c - 'a');
    }
    out.blocks.push_back(Block::from_offsets(a, b));
  }
  return out;
}

inline GroupedDesign published_gdd6() {
  return design_from_letters({kPublishedGdd6.begin(), kPublishedGdd6.end()}, 6);
}

inline GroupedDesign corrected_gdd6() {
  std::vector<std::string_view> rows(kPublishedGdd6.begin(), kPublishedGdd6.end());
  rows[13] = "134acf";
  return design_from_letters(rows, 6);
}

// Pairs the j-th alpha-parallel class on A with the j-th 1-factor on B, then
// the same with the groups exchanged.
inline Construction gdd24_alpha(const Resolution& res, const OneFactorization& f) {
  const auto& d = res.design;
  detail::require(d.k == 4, "gdd24_alpha needs block size 4");
  detail::require(d.n % 2 == 0, "gdd24_alpha needs even n");
  detail::require(d.lambda == 3 * res.alpha, "gdd24_alpha needs lambda = 3 alpha");
  detail::require(f.n == d.n, "1-factorization is on a different point count");
  validate_one_factorization(f);
  if (static_cast<int>(f.factors.size()) != res.class_count())
    throw Error(ErrorKind::MismatchedClassCount, std::to_string(res.class_count()) + " classes but " +
                                                     std::to_string(f.factors.size()) + " 1-factors");
  GroupedDesign out{d.n, 6, {}};
  for (bool swapped : {false, true})
    for (int j = 0; j < res.class_count(); ++j)
      for (int x : res.classes[j])
        for (auto [u, v] : f.factors[j]) out.blocks.push_back(detail::join(d.blocks[x], {u, v}, swapped));
  const int l1 = detail::checked_int(7LL * res.alpha * d.n, 4, "lambda1 = 7 alpha n / 4");
  return detail::finish(std::move(out), l1, 2 * res.alpha * (d.n - 1), {2, 4});
}

// Each class of an RBIBD(n,4,1), n = 16 mod 24, splits its blocks three ways
// into 1-factors F1 = {ab,cd}, F2 = {ac,bd}, F3 = {ad,bc}; its blocks are
// halved in canonical order and wired against those factors.
inline Construction gdd24_16mod24(const Resolution& res) {
  const auto& d = res.design;
  const int n = d.n;
  detail::require(d.k == 4 && d.lambda == 1 && res.alpha == 1, "gdd24_16mod24 needs an RBIBD(n,4,1)");
  detail::require(n % 24 == 16, "gdd24_16mod24 needs n = 16 mod 24");
  detail::require(res.class_count() == (n - 1) / 3 && res.class_size() == n / 4, "unexpected class shape");
  using Edges = std::vector<Edge>;
  GroupedDesign out{n, 6, {}};
  auto wire = [&](const Blocks& blocks, const Edges& edges, bool swapped) {
    for (const auto& x : blocks)
      for (auto [u, v] : edges) out.blocks.push_back(detail::join(x, {u, v}, swapped));
  };
  for (int j = 0; j < res.class_count(); ++j) {
    Blocks cls = res.class_blocks(j);
    std::sort(cls.begin(), cls.end());
    const size_t half = cls.size() / 2;
    const Blocks first(cls.begin(), cls.begin() + half), last(cls.begin() + half, cls.end());
    Edges f1, f2, f3_first, f3_last;
    for (size_t i = 0; i < cls.size(); ++i) {
      const auto& b = cls[i];
      f1.insert(f1.end(), {{b[0], b[1]}, {b[2], b[3]}});
      f2.insert(f2.end(), {{b[0], b[2]}, {b[1], b[3]}});
      auto& f3 = i < half ? f3_first : f3_last;
      f3.insert(f3.end(), {{b[0], b[3]}, {b[1], b[2]}});
    }
    wire(first, f1, false);
    wire(last, f2, false);
    wire(first, f3_first, false);
    wire(last, f3_last, false);
    wire(last, f1, true);
    wire(first, f2, true);
    wire(first, f3_last, true);
    wire(last, f3_first, true);
  }
  return detail::finish(std::move(out), 7 * n / 8, n - 1, {2, 4});
}

// Class j of a 4-resolvable BIBD(n,4,6) against the developed pairs
// {i, i+j} mod n, both ways round.
inline Construction gdd24_4res(const Resolution& res) {
  const auto& d = res.design;
  const int n = d.n;
  detail::require(n % 2 == 1 && n >= 5, "gdd24_4res needs odd n >= 5");
  detail::require(d.k == 4 && d.lambda == 6 && res.alpha == 4, "gdd24_4res needs a 4-resolvable BIBD(n,4,6)");
  detail::require(res.class_count() == (n - 1) / 2, "gdd24_4res needs (n-1)/2 classes");
  GroupedDesign out{n, 6, {}};
  for (bool swapped : {false, true})
    for (int j = 0; j < res.class_count(); ++j)
      for (int x : res.classes[j])
        for (int i = 0; i < n; ++i) out.blocks.push_back(detail::join(d.blocks[x], {i, (i + j + 1) % n}, swapped));
  return detail::finish(std::move(out), 7 * n, 8 * (n - 1), {2, 4});
}

// From the affine RBIBD(16,4,1) with point 15 deleted: the blocks through
// 15 leave triangles whose 15 edges are wired against the other blocks.
inline Construction gdd24_15() {
  const Resolution res = affine_rbibd16();
  constexpr int kInf = 15;
  std::vector<Edge> edges;
  std::vector<Blocks> rest(res.class_count());
  for (int j = 0; j < res.class_count(); ++j)
    for (const auto& b : res.class_blocks(j)) {
      if (std::find(b.begin(), b.end(), kInf) == b.end()) {
        rest[j].push_back(b);
        continue;
      }
      std::vector<int> tri;
      for (int x : b)
        if (x != kInf) tri.push_back(x);
      edges.insert(edges.end(), {{tri[0], tri[1]}, {tri[0], tri[2]}, {tri[1], tri[2]}});
    }
  GroupedDesign out{15, 6, {}};
  for (bool swapped : {false, true})
    for (const auto& cls : rest)
      for (const auto& b : cls)
        for (auto [u, v] : edges) out.blocks.push_back(detail::join(b, {u, v}, swapped));
  return detail::finish(std::move(out), 15, 16, {2, 4});
}

// Every BIBD(n,5,L) block on one group with every single point of the other.
inline Construction gdd15_bibd(const BlockDesign& d) {
  detail::require(d.k == 5, "gdd15_bibd needs block size 5");
  GroupedDesign out{d.n, 6, {}};
  for (bool swapped : {false, true})
    for (const auto& b : d.blocks)
      for (int y = 0; y < d.n; ++y) out.blocks.push_back(detail::join(b, {y}, swapped));
  const int l2 = detail::checked_int(static_cast<std::int64_t>(d.lambda) * (d.n - 1), 2, "lambda2");
  return detail::finish(std::move(out), d.lambda * d.n, l2, {1, 5});
}

inline bool rbibd_excluded(int n) { return n == 10 || n == 160 || n == 190; }

// Blocks in one half of class C_j meet the n/2 points covered by that half;
// the mirror pass pairs each half with the points covered by the other half.
inline Construction gdd15_rbibd(const Resolution& res) {
  const auto& d = res.design;
  const int n = d.n;
  if (rbibd_excluded(n))
    throw Error(ErrorKind::IngredientUnavailable,
                "no RBIBD(" + std::to_string(n) + ",5,4) exists for n in {10,160,190}");
  detail::require(n % 10 == 0, "gdd15_rbibd needs n = 0 mod 10");
  detail::require(d.k == 5 && d.lambda == 4 && res.alpha == 1, "gdd15_rbibd needs an RBIBD(n,5,4)");
  detail::require(res.class_count() == n - 1 && res.class_size() == n / 5, "unexpected class shape");
  GroupedDesign out{n, 6, {}};
  for (int j = 0; j < res.class_count(); ++j) {
    Blocks cls = res.class_blocks(j);
    std::sort(cls.begin(), cls.end());
    const size_t half = cls.size() / 2;
    std::array<Blocks, 2> halves{Blocks(cls.begin(), cls.begin() + half), Blocks(cls.begin() + half, cls.end())};
    std::array<std::vector<int>, 2> covered;
    for (int h = 0; h < 2; ++h) {
      for (const auto& b : halves[h]) covered[h].insert(covered[h].end(), b.begin(), b.end());
      std::sort(covered[h].begin(), covered[h].end());
    }
    for (int h = 0; h < 2; ++h)
      for (const auto& b : halves[h]) {
        for (int y : covered[h]) out.blocks.push_back(detail::join(b, {y}, false));
        for (int y : covered[1 - h]) out.blocks.push_back(detail::join(b, {y}, true));
      }
  }
  return detail::finish(std::move(out), 2 * n, n - 1, {1, 5});
}

// Classes 0..n/2-1 of the NRB meet points 0..n/2-1 of the other group and the
// remaining classes meet the rest; the mirror pass exchanges the two halves.
inline Construction gdd15_nrb(const NearResolution& nr) {
  const auto& d = nr.design;
  const int n = d.n;
  detail::require(n % 10 == 6, "gdd15_nrb needs n = 6 mod 10");
  detail::require(d.k == 5 && d.lambda == 4, "gdd15_nrb needs an NRB(n,5,4)");
  validate_near_resolution(nr);
  GroupedDesign out{n, 6, {}};
  for (int j = 0; j < n; ++j) {
    const bool low = j < n / 2;
    for (int x : nr.classes[j]) {
      for (int y = 0; y < n / 2; ++y) out.blocks.push_back(detail::join(d.blocks[x], {low ? y : y + n / 2}, false));
      for (int y = 0; y < n / 2; ++y) out.blocks.push_back(detail::join(d.blocks[x], {low ? y + n / 2 : y}, true));
    }
  }
  return detail::finish(std::move(out), 2 * n, n - 1, {1, 5});
}

namespace detail {

// Order of classes whose first (n-1)/4 entries carry every pair exactly
// lambda/2 times, keeping the given order when it already works.
inline std::optional<std::vector<int>> balanced_class_split(const Resolution& res) {
  const auto& d = res.design;
  const int s = res.class_count();
  const int half = s / 2;
  std::vector<std::vector<int>> counts(s, std::vector<int>(static_cast<size_t>(d.n) * (d.n - 1) / 2, 0));
  for (int j = 0; j < s; ++j)
    for (int x : res.classes[j]) {
      const auto& b = d.blocks[x];
      for (size_t p = 0; p < b.size(); ++p)
        for (size_t q = p + 1; q < b.size(); ++q) ++counts[j][pair_index(b[p], b[q], d.n)];
    }
  std::optional<std::vector<int>> found;
  for_each_combination(s, half, [&](const std::vector<int>& pick) {
    if (found) return;
    std::vector<int> sum(counts[0].size(), 0);
    for (int j : pick)
      for (size_t e = 0; e < sum.size(); ++e) sum[e] += counts[j][e];
    for (int c : sum)
      if (2 * c != d.lambda) return;
    std::vector<int> order = pick;
    for (int j = 0; j < s; ++j)
      if (std::find(pick.begin(), pick.end(), j) == pick.end()) order.push_back(j);
    found = order;
  });
  return found;
}

}  // namespace detail

// The first (n-1)/4 classes meet the odd-numbered points of the other group
// (1-based, i.e. offsets 0,2,4,...) and the rest meet the even-numbered ones;
// the mirror pass exchanges the two point sets.
inline Construction gdd15_5res(const Resolution& res) {
  const auto& d = res.design;
  const int n = d.n;
  detail::require(n % 2 == 1, "gdd15_5res needs odd n");
  detail::require(d.k == 5 && d.lambda == 10 && res.alpha == 5, "gdd15_5res needs a 5-resolvable BIBD(n,5,10)");
  detail::require(res.class_count() == (n - 1) / 2 && res.class_size() == n, "unexpected class shape");
  if ((n - 1) % 4 != 0)
    throw Error(ErrorKind::NonIntegralSplit,
                "(n-1)/4 = " + std::to_string(n - 1) + "/4 is not an integer, so the classes cannot be halved");
  const auto order = detail::balanced_class_split(res);
  detail::require(order.has_value(),
                  "no (n-1)/4 classes of the resolution form a BIBD(n,5,5); the split would be unbalanced");
  std::vector<int> odd, even;
  for (int y = 0; y < n; ++y) (y % 2 == 0 ? odd : even).push_back(y);
  GroupedDesign out{n, 6, {}};
  const int quarter = (n - 1) / 4;
  for (int pos = 0; pos < res.class_count(); ++pos) {
    const bool first = pos < quarter;
    for (int x : res.classes[(*order)[pos]]) {
      for (int y : first ? odd : even) out.blocks.push_back(detail::join(d.blocks[x], {y}, false));
      for (int y : first ? even : odd) out.blocks.push_back(detail::join(d.blocks[x], {y}, true));
    }
  }
  return detail::finish(std::move(out), 5 * n, 5 * (n - 1) / 2, {1, 5});
}

// ---------------------------------------------------------------------------
// Dispatch.

inline Minimality classify_minimality(const ConfigClass& cfg, int n, const IndexPair& claimed) {
  const IndexPair m = minimal_indices(cfg, n);
  for (auto [w, label] : {std::pair{1, Minimality::Minimal}, std::pair{2, Minimality::NearMinimal},
                          std::pair{7, Minimality::SevenTimes}, std::pair{14, Minimality::FourteenTimes}})
    if (claimed == m.scaled(w)) return label;
  return Minimality::Other;
}

struct ConstructOptions {
  std::optional<std::filesystem::path> import_path;
  std::uint64_t budget = default_search_budget();
};

namespace detail {

inline std::string residue_text(int n, int m) {
  return "n=" + std::to_string(n) + " = " + std::to_string(n % m) + " mod " + std::to_string(m);
}

inline ConstructionRecipe make_recipe(std::string name, ConfigClass cfg, int n, IndexPair claimed,
                                      std::optional<IngredientRequest> ingredient, std::string trace) {
  ConstructionRecipe r{std::move(name), cfg, n, claimed, Minimality::Other, std::move(ingredient), std::move(trace)};
  r.minimality = classify_minimality(cfg, n, claimed);
  return r;
}

inline ConstructionRecipe plan33(int n) {
  using R = IngredientRequest;
  const auto res = [&](int lambda, int alpha, std::string why) {
    const auto q = R::resolvable(n, 3, lambda, alpha);
    const int s = lambda * (n - 1) / (2 * alpha);
    const int t = n * alpha / 3;
    return make_recipe("alpha33", kC33, n, {lambda * t, alpha * alpha * s}, q,
                       residue_text(n, 6) + ": " + why + " via " + q.name());
  };
  switch (n % 6) {
    case 0:
      if (n == 6) return make_recipe("published-gdd6", kC33, 6, {4, 5}, std::nullopt, "n=6: embedded block list");
      return res(2, 1, "resolvable triple system");
    case 1: return res(1, 3, "3-resolvable Steiner triple system");
    case 2: return res(6, 3, "3-resolvable triple system");
    case 3: return res(1, 1, "Kirkman triple system");
    case 4: return res(2, 3, "3-resolvable triple system");
    default: return res(3, 3, "3-resolvable triple system");
  }
}

inline ConstructionRecipe plan24(int n) {
  using R = IngredientRequest;
  if (n == 15) return make_recipe("gdd24_15", kC24, n, {15, 16}, std::nullopt, "n=15: affine RBIBD(16,4,1) minus a point");
  if (n % 2 == 1) {
    const auto q = R::resolvable(n, 4, 6, 4);
    return make_recipe("gdd24_4res", kC24, n, {7 * n, 8 * (n - 1)}, q, "n odd: developed pairs via " + q.name());
  }
  if (n % 24 == 16) {
    const auto q = R::resolvable(n, 4, 1, 1);
    return make_recipe("gdd24_16mod24", kC24, n, {7 * n / 8, n - 1}, q, residue_text(n, 24) + ": " + q.name());
  }
  if (n % 4 == 2) {
    const auto q = R::resolvable(n, 4, 6, 2);
    return make_recipe("gdd24_alpha", kC24, n, {7 * n / 2, 4 * (n - 1)}, q,
                       residue_text(n, 4) + ": " + q.name() + " with a 1-factorization");
  }
  const auto q = R::resolvable(n, 4, 3, 1);
  return make_recipe("gdd24_alpha", kC24, n, {7 * n / 4, 2 * (n - 1)}, q,
                     residue_text(n, n % 8 == 4 ? 8 : 24) + ": " + q.name() + " with a 1-factorization");
}

inline ConstructionRecipe plan15(int n) {
  using R = IngredientRequest;
  const auto via_bibd = [&](int lambda, std::string why) {
    const auto q = R::bibd(n, 5, lambda);
    return make_recipe("gdd15_bibd", kC15, n, {lambda * n, lambda * (n - 1) / 2}, q, why + ": " + q.name());
  };
  const int m20 = n % 20;
  if (n == 10 || n == 15 || n == 160 || n == 190)
    return via_bibd(n % 2 ? 10 : 20, "n=" + std::to_string(n) + " is excluded from the minimal route, fallback");
  if (m20 == 1 || m20 == 5) return via_bibd(1, residue_text(n, 20));
  if (m20 == 11 || m20 == 15) return via_bibd(2, residue_text(n, 20));
  if (n % 10 == 0) {
    const auto q = R::resolvable(n, 5, 4, 1);
    return make_recipe("gdd15_rbibd", kC15, n, {2 * n, n - 1}, q, residue_text(n, 10) + ": " + q.name());
  }
  if (n % 10 == 6) {
    const auto q = R::near_resolvable(n, 5);
    return make_recipe("gdd15_nrb", kC15, n, {2 * n, n - 1}, q, residue_text(n, 10) + ": " + q.name());
  }
  return via_bibd(n % 2 ? 10 : 20, residue_text(n, 10));
}

}  // namespace detail

// Chooses the construction for (cfg, n) without building anything.
inline ConstructionRecipe plan(const ConfigClass& cfg, int n) {
  if (n < std::max(3, cfg.min_n()))
    throw Error(ErrorKind::UnsupportedN, to_string(cfg) + " needs n >= " + std::to_string(std::max(3, cfg.min_n())));
  switch (cfg.tag) {
    case ConfigTag::C33: return detail::plan33(n);
    case ConfigTag::C24: return detail::plan24(n);
    case ConfigTag::C15: return detail::plan15(n);
  }
  throw Error(ErrorKind::UnsupportedN, "unknown configuration");
}

inline ConstructionResult construct(const ConfigClass& cfg, int n, const ConstructOptions& options = {}) {
  ConstructionRecipe recipe = plan(cfg, n);
  Ingredient ingredient;
  if (recipe.ingredient) {
    recipe.ingredient->import_path = options.import_path;
    recipe.ingredient->budget = options.budget;
    try {
      ingredient = provide(*recipe.ingredient);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IngredientUnavailable) throw;
      throw Error(ErrorKind::IngredientUnavailable, recipe.trace + "; " + e.message());
    }
  }
  Construction c;
  if (recipe.name == "published-gdd6") {
    c = detail::finish(corrected_gdd6(), 4, 5, {3, 3});
  } else if (recipe.name == "alpha33") {
    c = alpha33(std::get<Resolution>(ingredient));
  } else if (recipe.name == "gdd24_15") {
    c = gdd24_15();
  } else if (recipe.name == "gdd24_4res") {
    c = gdd24_4res(std::get<Resolution>(ingredient));
  } else if (recipe.name == "gdd24_16mod24") {
    c = gdd24_16mod24(std::get<Resolution>(ingredient));
  } else if (recipe.name == "gdd24_alpha") {
    c = gdd24_alpha(std::get<Resolution>(ingredient), one_factorization(n));
  } else if (recipe.name == "gdd15_bibd") {
    c = gdd15_bibd(std::get<BlockDesign>(ingredient));
  } else if (recipe.name == "gdd15_rbibd") {
    c = gdd15_rbibd(std::get<Resolution>(ingredient));
  } else if (recipe.name == "gdd15_nrb") {
    c = gdd15_nrb(std::get<NearResolution>(ingredient));
  } else {
    throw std::logic_error("unknown recipe " + recipe.name);
  }
  if (c.claim.lambda1 != recipe.claimed.lambda1 || c.claim.lambda2 != recipe.claimed.lambda2)
    throw std::logic_error("recipe " + recipe.name + " claimed other indices than it built");
  return {std::move(c.design), std::move(c.claim), std::move(recipe)};
}

inline ConstructionResult minimal33(int n, const ConstructOptions& options = {}) { return construct(kC33, n, options); }

}  // namespace gdd6
