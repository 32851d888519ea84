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

// Necessary conditions for GDD(n,2,6;l1,l2): block and replication counts,
// the two inequality bounds, block-count parity for unequal splits, the
// split-dependent ratio between the indices, and minimal indices per split.

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdd6/design.hpp"
#include "gdd6/error.hpp"
#include "gdd6/rational.hpp"

namespace gdd6 {

enum class ConfigTag { C33, C24, C15 };

struct ConfigClass {
  ConfigTag tag = ConfigTag::C33;

  int s() const { return tag == ConfigTag::C33 ? 3 : tag == ConfigTag::C24 ? 2 : 1; }
  int t() const { return 6 - s(); }
  int beta() const { return s() * (s() - 1) / 2 + t() * (t() - 1) / 2; }
  // Smallest group size for which the split fits inside one group.
  int min_n() const { return t(); }
  Configuration configuration() const { return {s(), t()}; }

  bool operator==(const ConfigClass&) const = default;
};

inline constexpr ConfigClass kC33{ConfigTag::C33};
inline constexpr ConfigClass kC24{ConfigTag::C24};
inline constexpr ConfigClass kC15{ConfigTag::C15};

inline std::string to_string(const ConfigClass& c) {
  return std::to_string(c.s()) + "," + std::to_string(c.t());
}

inline std::optional<ConfigClass> config_class_for(const Configuration& c) {
  if (c.s + c.t != 6) return std::nullopt;
  switch (c.s) {
    case 3: return kC33;
    case 2: return kC24;
    case 1: return kC15;
    default: return std::nullopt;
  }
}

struct IndexPair {
  int lambda1 = 1;
  int lambda2 = 1;

  bool operator==(const IndexPair&) const = default;
  IndexPair scaled(int w) const { return {lambda1 * w, lambda2 * w}; }
};

inline std::string to_string(const IndexPair& idx) {
  return "(" + std::to_string(idx.lambda1) + "," + std::to_string(idx.lambda2) + ")";
}

struct BlockReplication {
  Rational b;
  Rational r;
};

// b = (l1 n(n-1) + l2 n^2) / 15, r = (l1 (n-1) + l2 n) / 5.
inline BlockReplication block_and_replication(int n, const IndexPair& idx) {
  if (n < 2) throw std::invalid_argument("block_and_replication: n must be at least 2");
  const std::int64_t nn = n;
  return {Rational(idx.lambda1 * nn * (nn - 1) + idx.lambda2 * nn * nn, 15),
          Rational(idx.lambda1 * (nn - 1) + idx.lambda2 * nn, 5)};
}

inline bool residue_feasible(int n, const IndexPair& idx) {
  const auto [b, r] = block_and_replication(n, idx);
  return is_integral(b) && is_integral(r);
}

inline bool even_block_check(std::int64_t b) { return b % 2 == 0; }

// l2 = (l1 (n-1) / n) * (k(k-1) - 2 beta) / (2 beta), for any split with the
// given beta = C(s,2) + C(t,2).
inline Rational general_lambda2(int k, int beta, int n, int lambda1) {
  return Rational(static_cast<std::int64_t>(lambda1) * (n - 1), n) *
         Rational(k * (k - 1) - 2 * beta, 2 * beta);
}

inline Rational config_lambda2(const ConfigClass& cfg, int n, int lambda1) {
  if (n < 2 || lambda1 < 1) throw std::invalid_argument("config_lambda2: needs n >= 2, lambda1 >= 1");
  return general_lambda2(6, cfg.beta(), n, lambda1);
}

// Closed forms of the same ratio for each split.
inline Rational lambda2_33(int n, int lambda1) { return Rational(3 * static_cast<std::int64_t>(lambda1) * (n - 1), 2 * n); }
inline Rational lambda2_24(int n, int lambda1) { return Rational(8 * static_cast<std::int64_t>(lambda1) * (n - 1), 7 * n); }
inline Rational lambda2_15(int n, int lambda1) { return Rational(static_cast<std::int64_t>(lambda1) * (n - 1), 2 * n); }

struct Check {
  std::string name;
  bool pass = true;
  bool applicable = true;
  std::string detail;
};

inline std::vector<Check> inequality_checks(int n, const IndexPair& idx) {
  if (n < 2) throw std::invalid_argument("inequality_checks: n must be at least 2");
  const auto [b, r] = block_and_replication(n, idx);
  std::vector<Check> checks;

  const Rational bound = std::max(2 * r - idx.lambda1, 2 * r - idx.lambda2);
  checks.push_back({"b>=max(2r-l1,2r-l2)", b >= bound, true,
                    "b=" + to_string(b) + ", max(2r-l1,2r-l2)=" + to_string(bound)});

  const Rational l2_max(2 * static_cast<std::int64_t>(idx.lambda1) * (n - 1), n);
  checks.push_back({"l2<=2l1(n-1)/n", Rational(idx.lambda2) <= l2_max, true,
                    "l2=" + std::to_string(idx.lambda2) + ", 2l1(n-1)/n=" + to_string(l2_max)});

  // The family (s, 2st) always violates the bound above; it is reported by
  // name so the verdict points at it directly.
  const bool in_family = idx.lambda1 > 0 && idx.lambda2 % (2 * idx.lambda1) == 0;
  checks.push_back({"excluded-family", !in_family, true,
                    in_family ? "indices have the form (s, 2st), which never exists"
                              : "not of the form (s, 2st)"});
  return checks;
}

// Smallest (l1, l2) on the split's index ratio with integral b and r, and
// with even b when s != t.
inline IndexPair minimal_indices(const ConfigClass& cfg, int n) {
  if (n < cfg.min_n())
    throw Error(ErrorKind::UnsupportedN, "n=" + std::to_string(n) + " is below " +
                                             std::to_string(cfg.min_n()) + " for configuration " +
                                             to_string(cfg));
  const bool parity = cfg.s() != cfg.t();
  // The ratio l2/l1 has denominator dividing 2 beta n, and b, r need at most a
  // further factor of 30, so the scan is bounded.
  const int limit = 60 * cfg.beta() * n;
  for (int lambda1 = 1; lambda1 <= limit; ++lambda1) {
    const Rational l2 = config_lambda2(cfg, n, lambda1);
    if (!is_integral(l2) || l2 <= 0) continue;
    const IndexPair idx{lambda1, static_cast<int>(l2.numerator())};
    const auto [b, r] = block_and_replication(n, idx);
    if (!is_integral(b) || !is_integral(r)) continue;
    if (parity && !even_block_check(b.numerator())) continue;
    return idx;
  }
  throw std::logic_error("minimal_indices: scan limit exceeded");
}

struct FeasibilityVerdict {
  bool feasible = false;
  Rational b;
  Rational r;
  std::vector<Check> checks;

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

struct VerdictOptions {
  // Turned off when probing indices below the minimal pair itself.
  bool require_minimal_multiple = true;
};

inline FeasibilityVerdict feasibility_verdict(int n, const IndexPair& idx,
                                              const std::optional<ConfigClass>& cfg,
                                              VerdictOptions options = {}) {
  if (n < 2) throw std::invalid_argument("feasibility_verdict: n must be at least 2");
  FeasibilityVerdict verdict;
  const auto [b, r] = block_and_replication(n, idx);
  verdict.b = b;
  verdict.r = r;
  auto& checks = verdict.checks;

  if (idx.lambda1 < 1 || idx.lambda2 < 1)
    checks.push_back({"positive-indices", false, true, "both indices must be at least 1"});
  checks.push_back({"b-integral", is_integral(b), true, "b=" + to_string(b)});
  checks.push_back({"r-integral", is_integral(r), true, "r=" + to_string(r)});

  if (cfg) {
    Check parity{"b-even-for-config", true, true, ""};
    if (cfg->s() == cfg->t()) {
      parity.applicable = false;
      parity.detail =
          "not applied for s=t: equal splits are not forced into an even block count "
          "(the 49-block (3,3) design GDD(7,2,6;7,9) exists)";
    } else if (!is_integral(b)) {
      parity.applicable = false;
      parity.detail = "b not integral";
    } else {
      parity.pass = even_block_check(b.numerator());
      parity.detail = "b=" + to_string(b);
    }
    checks.push_back(parity);
  } else {
    checks.push_back({"b-even-for-config", true, false, "no fixed configuration claimed"});
  }

  for (auto& c : inequality_checks(n, idx)) checks.push_back(std::move(c));

  if (cfg) {
    const Rational expected = config_lambda2(*cfg, n, std::max(idx.lambda1, 1));
    checks.push_back({"beta-formula-consistency", expected == Rational(idx.lambda2), true,
                      "configuration " + to_string(*cfg) + " forces l2=" + to_string(expected)});
    if (options.require_minimal_multiple) {
      Check multiple{"multiple-of-minimal", false, true, ""};
      if (n < cfg->min_n()) {
        multiple.detail = "n below the configuration minimum " + std::to_string(cfg->min_n());
      } else {
        const IndexPair m = minimal_indices(*cfg, n);
        multiple.pass = idx.lambda1 % m.lambda1 == 0 &&
                        idx.lambda2 * m.lambda1 == idx.lambda1 * m.lambda2;
        multiple.detail = "minimal indices " + to_string(m);
        if (multiple.pass) multiple.detail += ", w=" + std::to_string(idx.lambda1 / m.lambda1);
      }
      checks.push_back(multiple);
    }
  } else {
    checks.push_back({"beta-formula-consistency", true, false, "no fixed configuration claimed"});
  }

  verdict.feasible = std::all_of(checks.begin(), checks.end(),
                                 [](const Check& c) { return !c.applicable || c.pass; });
  return verdict;
}

}  // namespace gdd6
