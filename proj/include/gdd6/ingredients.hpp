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

// Ingredient supply: named built-in designs and the strategy chain
// built-in -> import -> search that feeds the constructions.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gdd6/block_design.hpp"
#include "gdd6/budget.hpp"
#include "gdd6/error.hpp"
#include "gdd6/io.hpp"
#include "gdd6/resolution_search.hpp"

namespace gdd6 {

inline BlockDesign repeat_design(const BlockDesign& d, int copies) {
  Blocks blocks;
  for (int i = 0; i < copies; ++i) blocks.insert(blocks.end(), d.blocks.begin(), d.blocks.end());
  return make_block_design(d.n, d.k, d.lambda * copies, std::move(blocks));
}

// Lines of the affine plane over Z_p, p prime.
inline BlockDesign affine_plane(int p) {
  Blocks lines;
  for (int m = 0; m < p; ++m)
    for (int c = 0; c < p; ++c) {
      std::vector<int> line;
      for (int x = 0; x < p; ++x) line.push_back(p * x + (m * x + c) % p);
      lines.push_back(line);
    }
  for (int c = 0; c < p; ++c) {
    std::vector<int> line;
    for (int y = 0; y < p; ++y) line.push_back(p * c + y);
    lines.push_back(line);
  }
  return make_block_design(p * p, p, 1, std::move(lines));
}

// 3-resolvable TS(10,2) on Z_3 x {0,1,2} plus a fixed point 9; each class is
// a union of orbits under x -> x+1 in the first coordinate.
inline Resolution three_resolvable_ts10() {
  std::vector<Blocks> classes{
      {{0, 1, 2}, {0, 1, 2}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}, {3, 4, 5}, {3, 6, 9}, {4, 7, 9}, {5, 8, 9}, {6, 7, 8}},
      {{0, 3, 7}, {1, 4, 8}, {2, 5, 6}, {0, 4, 6}, {1, 5, 7}, {2, 3, 8}, {0, 5, 9}, {1, 3, 9}, {2, 4, 9}, {6, 7, 8}},
      {{0, 4, 8}, {1, 5, 6}, {2, 3, 7}, {0, 5, 7}, {1, 3, 8}, {2, 4, 6}, {0, 8, 9}, {1, 6, 9}, {2, 7, 9}, {3, 4, 5}},
  };
  return make_resolution(10, 3, 2, 3, std::move(classes));
}

inline bool bibd_admissible(int n, int k, int lambda) {
  if (k < 2 || n < k || lambda < 1) return false;
  const std::int64_t l = lambda;
  return (l * (n - 1)) % (k - 1) == 0 && (l * n * (n - 1)) % (static_cast<std::int64_t>(k) * (k - 1)) == 0;
}

namespace detail {

inline std::optional<BlockDesign> builtin_bibd5_exact(int n, int lambda) {
  if (n == 5) return repeat_design(complete_design(5, 5), lambda);
  if (const auto full = binomial(n - 2, 3); lambda % full == 0 && binomial(n, 5) * (lambda / full) <= 20000)
    return repeat_design(complete_design(n, 5), static_cast<int>(lambda / full));
  if (n == 11 && lambda == 2) return develop_family({{1, 3, 4, 5, 9}}, 11, 5, 2);
  if (n == 21 && lambda == 1) return develop_family({{0, 1, 4, 14, 16}}, 21, 5, 1);
  if (n == 25 && lambda == 1) return affine_plane(5);
  if (n == 9 && lambda == 10) {
    const BlockDesign quad = develop_family({{0, 1, 2, 5}, {0, 1, 3, 7}}, 9, 4, 3);
    return repeat_design(complement_design(quad), 2);
  }
  return std::nullopt;
}

}  // namespace detail

// A BIBD(n,5,lambda) from the built-ins, as copies of a smaller-index
// built-in when needed; nullopt when none applies.
inline std::optional<BlockDesign> builtin_bibd5(int n, int lambda) {
  if (!bibd_admissible(n, 5, lambda)) return std::nullopt;
  if (auto d = detail::builtin_bibd5_exact(n, lambda)) return d;
  for (int base = 1; base < lambda; ++base)
    if (lambda % base == 0 && bibd_admissible(n, 5, base))
      if (auto d = detail::builtin_bibd5_exact(n, base)) return repeat_design(*d, lambda / base);
  return std::nullopt;
}

enum class IngredientFamily { Bibd, Resolvable, NearResolvable, OneFactorization };

struct IngredientRequest {
  IngredientFamily family = IngredientFamily::Bibd;
  int n = 0;
  int k = 3;
  int lambda = 1;
  int alpha = 1;  // Resolvable only
  std::optional<std::filesystem::path> import_path;
  std::uint64_t budget = default_search_budget();

  static IngredientRequest bibd(int n, int k, int lambda) { return {IngredientFamily::Bibd, n, k, lambda, 1, {}, default_search_budget()}; }
  static IngredientRequest resolvable(int n, int k, int lambda, int alpha) {
    return {IngredientFamily::Resolvable, n, k, lambda, alpha, {}, default_search_budget()};
  }
  static IngredientRequest near_resolvable(int n, int k) {
    return {IngredientFamily::NearResolvable, n, k, k - 1, 1, {}, default_search_budget()};
  }
  static IngredientRequest one_factorization(int n) {
    return {IngredientFamily::OneFactorization, n, 2, 1, 1, {}, default_search_budget()};
  }

  std::string name() const {
    const std::string ts = "TS(" + std::to_string(n) + "," + std::to_string(lambda) + ")";
    const std::string bibd = "BIBD(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(lambda) + ")";
    switch (family) {
      case IngredientFamily::Bibd: return k == 3 ? ts : bibd;
      case IngredientFamily::Resolvable:
        if (alpha == 1) return k == 3 ? "resolvable " + ts : "R" + bibd;
        return std::to_string(alpha) + "-resolvable " + (k == 3 ? ts : bibd);
      case IngredientFamily::NearResolvable:
        return "NRB(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(k - 1) + ")";
      case IngredientFamily::OneFactorization: return "1-factorization of K_" + std::to_string(n);
    }
    return bibd;
  }
};

using Ingredient = std::variant<BlockDesign, Resolution, NearResolution, OneFactorization>;

inline NearResolution nrb6() {
  std::vector<Blocks> classes;
  for (int i = 0; i < 6; ++i) {
    std::vector<int> block;
    for (int x = 0; x < 6; ++x)
      if (x != i) block.push_back(x);
    classes.push_back({block});
  }
  return make_near_resolution(6, 5, std::move(classes));
}

namespace detail {

inline std::optional<Ingredient> builtin_ingredient(const IngredientRequest& q) {
  switch (q.family) {
    case IngredientFamily::OneFactorization:
      if (q.n >= 2 && q.n % 2 == 0) return one_factorization(q.n);
      return std::nullopt;
    case IngredientFamily::NearResolvable:
      if (q.n == 6 && q.k == 5) return nrb6();
      return std::nullopt;
    case IngredientFamily::Bibd:
      if (q.k == 3 && q.lambda == 1 && (q.n == 3 || (q.n >= 7 && (q.n % 6 == 1 || q.n % 6 == 3)))) return sts(q.n);
      if (q.k == 5) {
        if (auto d = builtin_bibd5(q.n, q.lambda)) return *d;
      }
      if (q.k == q.n) return repeat_design(complete_design(q.n, q.n), q.lambda);
      if (const auto full = binomial(q.n - 2, q.k - 2); q.k < q.n && q.lambda % full == 0 && binomial(q.n, q.k) <= 5000)
        return repeat_design(complete_design(q.n, q.k), static_cast<int>(q.lambda / full));
      return std::nullopt;
    case IngredientFamily::Resolvable: {
      const int n = q.n, k = q.k, l = q.lambda, a = q.alpha;
      if (n == 16 && k == 4 && l == 1 && a == 1) return affine_rbibd16();
      if (n == 10 && k == 3 && l == 2 && a == 3) return three_resolvable_ts10();
      if (n == 3 && k == 3 && a == 1) return resolve(repeat_design(sts(3), l), 1);
      if (k == 3 && l == 1 && (n == 9 || (n == 7 && a == 3))) return resolve(sts(n), a);
      if (n == k && a == 1) return resolve(repeat_design(complete_design(n, n), l), 1);
      if (n == 5 && k == 4 && a == 4 && l % 3 == 0) {
        std::vector<Blocks> classes(l / 3, complete_design(5, 4).blocks);
        return make_resolution(5, 4, l, 4, std::move(classes));
      }
      if (n == 6 && k == 4 && l == 6 && a == 2) return resolve(complete_design(6, 4), 2);
      if (n == 9 && k == 5 && l == 10 && a == 5) {
        // Two copies of a 5-resolved BIBD(9,5,5), so either copy alone is a
        // balanced half of the classes.
        const BlockDesign quad = develop_family({{0, 1, 2, 5}, {0, 1, 3, 7}}, 9, 4, 3);
        const Resolution half = resolve(complement_design(quad), 5);
        std::vector<Blocks> classes;
        for (int copy = 0; copy < 2; ++copy)
          for (int j = 0; j < half.class_count(); ++j) classes.push_back(half.class_blocks(j));
        return make_resolution(9, 5, 10, 5, std::move(classes));
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

inline Ingredient search_ingredient(const IngredientRequest& q) {
  switch (q.family) {
    case IngredientFamily::OneFactorization: throw Error(ErrorKind::NotFound, "no 1-factorization of odd order");
    case IngredientFamily::NearResolvable: return cyclic_near_resolution(q.n, q.k, q.budget);
    case IngredientFamily::Bibd: {
      if (!bibd_admissible(q.n, q.k, q.lambda))
        throw Error(ErrorKind::InfeasibleParameters, q.name() + " is inadmissible");
      try {
        return develop_family(cyclic_difference_family(q.n, q.k, q.lambda, q.budget), q.n, q.k, q.lambda);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::BudgetExhausted || binomial(q.n, q.k) > 5000) throw;
      }
      return bibd_search(q.n, q.k, q.lambda, q.budget);
    }
    case IngredientFamily::Resolvable: {
      require_admissible(q.n, q.k, q.lambda, q.alpha);
      if (q.alpha == q.k) {
        try {
          return cyclic_resolution(q.n, q.k, q.lambda, q.budget);
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::BudgetExhausted) throw;
        }
      }
      return find_resolvable(q.n, q.k, q.lambda, q.alpha, q.budget);
    }
  }
  throw Error(ErrorKind::NotFound, "no search strategy");
}

inline Ingredient import_ingredient(const IngredientRequest& q, const std::filesystem::path& path) {
  const IngredientFile f = read_ingredient_file(path);
  if (f.n != q.n || f.k != q.k || f.lambda != q.lambda)
    throw Error(ErrorKind::InvalidIngredient, path.string() + " holds BIBD(" + std::to_string(f.n) + "," +
                                                  std::to_string(f.k) + "," + std::to_string(f.lambda) +
                                                  "), expected " + q.name());
  switch (q.family) {
    case IngredientFamily::Bibd: return to_block_design(f);
    case IngredientFamily::Resolvable: {
      if (f.alpha != q.alpha)
        throw Error(ErrorKind::InvalidIngredient, path.string() + " is not " + std::to_string(q.alpha) + "-resolved");
      return to_resolution(f);
    }
    case IngredientFamily::NearResolvable: return to_near_resolution(f);
    case IngredientFamily::OneFactorization: break;
  }
  throw Error(ErrorKind::InvalidIngredient, "1-factorizations are not imported");
}

inline std::string reason_text(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::BudgetExhausted: return "budget exhausted";
    case ErrorKind::NotFound: return "exhausted without a design";
    case ErrorKind::InfeasibleParameters: return "parameters inadmissible";
    case ErrorKind::UnsupportedN: return "unsupported";
    default: return e.message();
  }
}

}  // namespace detail

// Strategy chain: built-in, then the import file when one is given, then
// bounded search. An import file that fails validation is an error, never
// skipped.
inline Ingredient provide(const IngredientRequest& q) {
  if (auto built = detail::builtin_ingredient(q)) return std::move(*built);
  std::string import_reason = "none";
  if (q.import_path) return detail::import_ingredient(q, *q.import_path);
  std::string search_reason;
  try {
    return detail::search_ingredient(q);
  } catch (const Error& e) {
    search_reason = detail::reason_text(e);
  }
  throw Error(ErrorKind::IngredientUnavailable,
              q.name() + " unavailable (built-in: none; search: " + search_reason + "; import: " + import_reason +
                  "); supply it as an ingredient file via --import");
}

inline BlockDesign provide_design(const IngredientRequest& q) { return std::get<BlockDesign>(provide(q)); }
inline Resolution provide_resolution(const IngredientRequest& q) { return std::get<Resolution>(provide(q)); }
inline NearResolution provide_near_resolution(const IngredientRequest& q) { return std::get<NearResolution>(provide(q)); }

inline NearResolution nrb(int n, std::uint64_t budget = default_search_budget()) {
  if (n < 6 || n % 5 != 1) throw Error(ErrorKind::UnsupportedN, "NRB(n,5,4) needs n = 1 mod 5, got " + std::to_string(n));
  if (n == 6) return nrb6();
  return cyclic_near_resolution(n, 5, budget);
}

inline BlockDesign bibd5(int n, int lambda, std::uint64_t budget = default_search_budget()) {
  if (!bibd_admissible(n, 5, lambda))
    throw Error(ErrorKind::UnsupportedN, "BIBD(" + std::to_string(n) + ",5," + std::to_string(lambda) + ") is inadmissible");
  if (auto d = builtin_bibd5(n, lambda)) return *d;
  auto q = IngredientRequest::bibd(n, 5, lambda);
  q.budget = budget;
  return std::get<BlockDesign>(detail::search_ingredient(q));
}

}  // namespace gdd6
