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

#include <gtest/gtest.h>

#include "gdd6.hpp"
#include "oracles.hpp"

using namespace gdd6;

namespace {

const ConfigClass kAll[] = {kC33, kC24, kC15};

bool check_passes(const FeasibilityVerdict& v, const std::string& name) {
  const Check* c = v.find(name);
  return c && (!c->applicable || c->pass);
}

}  // namespace

TEST(Counting, BlockAndReplication) {
  const auto [b, r] = block_and_replication(6, {4, 5});
  EXPECT_EQ(b, Rational(20));
  EXPECT_EQ(r, Rational(10));
  EXPECT_EQ(block_and_replication(7, {7, 9}).b, Rational(49));
  EXPECT_EQ(block_and_replication(10, {1, 2}).b, Rational(58, 3));
}

TEST(Counting, BetaPerConfiguration) {
  EXPECT_EQ(kC33.beta(), 6);
  EXPECT_EQ(kC24.beta(), 7);
  EXPECT_EQ(kC15.beta(), 10);
  EXPECT_EQ(config_class_for({2, 4}), kC24);
  EXPECT_FALSE(config_class_for({0, 6}).has_value());
}

TEST(Counting, SpecialisedLambda2MatchesGeneralFormula) {
  for (const auto& cfg : kAll)
    for (int n = 2; n <= 200; ++n)
      for (int l1 = 1; l1 <= 100; ++l1) {
        const Rational general = general_lambda2(6, cfg.beta(), n, l1);
        const Rational special = cfg == kC33 ? lambda2_33(n, l1) : cfg == kC24 ? lambda2_24(n, l1) : lambda2_15(n, l1);
        const Rational counted(static_cast<std::int64_t>(l1) * (n - 1) * (15 - cfg.beta()),
                               static_cast<std::int64_t>(cfg.beta()) * n);
        ASSERT_EQ(general, special) << to_string(cfg) << " n=" << n << " l1=" << l1;
        ASSERT_EQ(general, counted);
        ASSERT_EQ(config_lambda2(cfg, n, l1), general);
      }
}

TEST(Minimal, MatchesBlockCountOracle) {
  for (const auto& cfg : kAll)
    for (int n = std::max(3, cfg.min_n()); n <= 200; ++n) {
      const auto [l1, l2] = oracle::minimal_by_block_count(cfg.s(), n);
      ASSERT_EQ(minimal_indices(cfg, n), (IndexPair{l1, l2})) << to_string(cfg) << " n=" << n;
    }
}

TEST(Minimal, SpotValues) {
  EXPECT_EQ(minimal_indices(kC33, 9), (IndexPair{3, 4}));
  EXPECT_EQ(minimal_indices(kC33, 12), (IndexPair{8, 11}));
  EXPECT_EQ(minimal_indices(kC33, 11), (IndexPair{33, 45}));
  EXPECT_EQ(minimal_indices(kC33, 8), (IndexPair{48, 63}));
  EXPECT_EQ(minimal_indices(kC24, 8), (IndexPair{1, 1}));
  EXPECT_EQ(minimal_indices(kC24, 15), (IndexPair{15, 16}));
  EXPECT_EQ(minimal_indices(kC15, 20), (IndexPair{40, 19}));
  EXPECT_EQ(minimal_indices(kC15, 7), (IndexPair{70, 30}));
}

TEST(Verdict, MinimalPairsAndTheirMultiplesAreFeasible) {
  for (const auto& cfg : kAll)
    for (int n = std::max(3, cfg.min_n()); n <= 60; ++n) {
      const auto m = minimal_indices(cfg, n);
      for (int w = 1; w <= 3; ++w) ASSERT_TRUE(feasibility_verdict(n, m.scaled(w), cfg).feasible) << n;
    }
}

TEST(Verdict, NothingOnTheConfigurationLineBelowTheMinimumIsFeasible) {
  for (const auto& cfg : kAll)
    for (int n = std::max(3, cfg.min_n()); n <= 60; ++n) {
      const auto m = minimal_indices(cfg, n);
      for (int l1 = 1; l1 < m.lambda1; ++l1) {
        const Rational l2 = config_lambda2(cfg, n, l1);
        if (!is_integral(l2) || l2 < Rational(1)) continue;
        const IndexPair idx{l1, static_cast<int>(l2.numerator())};
        ASSERT_FALSE(feasibility_verdict(n, idx, cfg, {.require_minimal_multiple = false}).feasible)
            << to_string(cfg) << " n=" << n << " " << to_string(idx);
      }
    }
}

TEST(Verdict, NamesTheLambda2Bound) {
  const auto v = feasibility_verdict(10, {1, 2}, std::nullopt);
  EXPECT_FALSE(v.feasible);
  EXPECT_FALSE(check_passes(v, "l2<=2l1(n-1)/n"));
  EXPECT_FALSE(check_passes(v, "excluded-family"));
}

TEST(Verdict, PublishedSixPointIndicesAreFeasible) {
  EXPECT_TRUE(feasibility_verdict(6, {4, 5}, kC33).feasible);
  EXPECT_TRUE(feasibility_verdict(8, {1, 1}, kC24).feasible);
}

TEST(Verdict, EvenBlockCountOnlyForUnequalSplits) {
  const auto odd33 = feasibility_verdict(7, {7, 9}, kC33);
  EXPECT_TRUE(odd33.feasible);
  EXPECT_FALSE(odd33.find("b-even-for-config")->applicable);
  const auto odd15 = feasibility_verdict(7, {35, 15}, kC15);
  EXPECT_FALSE(odd15.feasible);
  EXPECT_FALSE(check_passes(odd15, "b-even-for-config"));
}

TEST(Verdict, ExcludedFamilyNeverFeasible) {
  for (int n = 2; n <= 30; ++n)
    for (int s = 1; s <= 4; ++s)
      for (int t = 1; t <= 4; ++t) EXPECT_FALSE(feasibility_verdict(n, {s, 2 * s * t}, std::nullopt).feasible);
}

TEST(Verdict, IntegralityMatchesDirectArithmetic) {
  for (int n = 2; n <= 40; ++n)
    for (int l1 = 1; l1 <= 30; ++l1)
      for (int l2 = 1; l2 <= 30; ++l2) {
        const bool direct = (l1 * n * (n - 1) + l2 * n * n) % 15 == 0 && (l1 * (n - 1) + l2 * n) % 5 == 0;
        ASSERT_EQ(residue_feasible(n, {l1, l2}), direct);
      }
}

TEST(ResidueTable, MatchesDirectRecomputation) {
  const auto t = residue_table();
  for (int c = 0; c < 15; ++c)
    for (int a = 0; a < 5; ++a)
      for (int n = 0; n < 15; ++n) {
        bool any = false;
        for (int l1 = a + 15; l1 < a + 30; l1 += 5) {
          const int m = n + 15, l2 = c + 15;
          any = any || ((l1 * m * (m - 1) + l2 * m * m) % 15 == 0 && (l1 * (m - 1) + l2 * m) % 5 == 0);
        }
        ASSERT_EQ(t[c][a].count(n) == 1, any) << c << " " << a << " " << n;
      }
}

TEST(ResidueTable, ZeroRowAgreesWithPublished) {
  for (const auto& d : diff_residue_table()) EXPECT_EQ(d.cell.rfind("l2=0 ", 0), std::string::npos) << d.cell;
}

TEST(ResidueTable, EveryDiffIsAWitnessedCell) {
  const auto& published = published_residue_table();
  for (const auto& d : diff_residue_table()) {
    const int c = std::stoi(d.cell.substr(3));
    const int a = std::stoi(d.cell.substr(d.cell.find("l1=") + 3));
    const auto computed = residue_table()[c][a];
    for (int n : computed)
      if (!published[c][a].count(n)) {
        bool witnessed = false;
        for (int l1 = a + 15; l1 < a + 30; l1 += 5) witnessed = witnessed || residue_feasible(n + 15, {l1, c + 15});
        EXPECT_TRUE(witnessed);
      }
  }
}

TEST(MinimalTables, ThreeThreeAndTwoFourMatchPublishedForAllN) {
  EXPECT_TRUE(diff_minimal_table(kC33).empty());
  EXPECT_TRUE(diff_minimal_table(kC24).empty());
}

TEST(MinimalTables, OneFiveDiffersExactlyWherePublishedPairsHaveOddBlockCount) {
  for (int n = 5; n <= 200; ++n) {
    const auto published = published_minimal(kC15, n);
    ASSERT_TRUE(published.has_value());
    const bool differs = *published != minimal_indices(kC15, n);
    EXPECT_EQ(differs, n % 4 == 3 && (n % 20 == 3 || n % 20 == 7 || n % 20 == 19)) << n;
    if (differs) {
      EXPECT_FALSE(feasibility_verdict(n, *published, kC15).feasible);
      EXPECT_EQ(minimal_indices(kC15, n), published->scaled(2));
    }
  }
}

TEST(MinimalTables, RowFormulas) {
  const auto text33 = format_minimal_table(minimal_table(kC33));
  EXPECT_NE(text33.find("n=5 mod 6 | 3n | 9(n-1)/2"), std::string::npos);
  const auto rows15 = minimal_table(kC15);
  bool found = false;
  for (const auto& row : rows15)
    if (std::find(row.residues.begin(), row.residues.end(), 2) != row.residues.end()) {
      found = true;
      EXPECT_EQ(format_pair(row), "(10n, 5(n-1))");
    }
  EXPECT_TRUE(found);
}

TEST(MinimalTables, FittedRowsReproduceEveryN) {
  for (const auto& cfg : kAll)
    for (const auto& row : minimal_table(cfg))
      for (int r : row.residues)
        for (int n = r; n <= 200; n += row.modulus) {
          if (n < table_start(cfg)) continue;
          const Rational l1 = row.c1 * n, l2 = row.c2 * (n - 1);
          ASSERT_EQ(minimal_indices(cfg, n), (IndexPair{static_cast<int>(l1.numerator()), static_cast<int>(l2.numerator())}));
        }
}

TEST(Summary, LabelsAreExactMultiplesOfMinimal) {
  for (const auto& cfg : kAll)
    for (int n = std::max(3, cfg.min_n()); n <= 200; ++n) {
      const auto r = plan(cfg, n);
      const auto m = minimal_indices(cfg, n);
      const int factor = r.minimality == Minimality::Minimal        ? 1
                         : r.minimality == Minimality::NearMinimal  ? 2
                         : r.minimality == Minimality::SevenTimes   ? 7
                         : r.minimality == Minimality::FourteenTimes ? 14
                                                                    : 0;
      if (factor) ASSERT_EQ(r.claimed, m.scaled(factor)) << to_string(cfg) << " n=" << n;
      ASSERT_TRUE(feasibility_verdict(n, r.claimed, cfg).feasible) << to_string(cfg) << " n=" << n;
    }
}

TEST(Summary, TwoFourLabelsMatchPublished) { EXPECT_TRUE(diff_summary_table(kC24).empty()); }

TEST(Summary, OneFiveLabelsDifferOnlyOnTheOddBlockCountRows) {
  for (const auto& d : diff_summary_table(kC15)) {
    const int n = std::stoi(d.cell.substr(2));
    EXPECT_EQ(n % 4, 3);
    EXPECT_EQ(d.published, "NearMinimal");
    EXPECT_EQ(d.computed, "Minimal");
  }
}
