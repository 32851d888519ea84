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

SearchProblem problem(int n, ConfigClass cfg, IndexPair idx) {
  SearchProblem p;
  p.n = n;
  p.cfg = cfg;
  p.idx = idx;
  p.budget = 50'000'000;
  return p;
}

struct Instance {
  int n;
  ConfigClass cfg;
  IndexPair idx;
  bool exists;
};

const Instance kInstances[] = {
    {3, kC33, {1, 1}, true},  {4, kC33, {8, 9}, true},   {5, kC15, {5, 2}, true},
    {4, kC24, {7, 6}, true},  {8, kC24, {1, 1}, false},
};

}  // namespace

TEST(Search, EightPointTwoFourHasNoDesign) {
  const auto a = search(problem(8, kC24, {1, 1}));
  const auto b = search(problem(8, kC24, {1, 1}));
  EXPECT_EQ(a.kind, SearchKind::ExhaustedNonexistent);
  EXPECT_FALSE(a.witness.has_value());
  EXPECT_EQ(a.stats.nodes, b.stats.nodes);
  EXPECT_GT(a.stats.nodes, 0u);
}

TEST(Search, AgreesWithNaiveOracle) {
  for (const auto& inst : kInstances) {
    oracle::NaiveSearch naive(inst.n, inst.cfg.s(), inst.idx.lambda1, inst.idx.lambda2);
    const bool naive_found = naive.run().has_value();
    EXPECT_EQ(naive_found, inst.exists) << inst.n << " " << to_string(inst.cfg);
    const auto out = search(problem(inst.n, inst.cfg, inst.idx));
    EXPECT_EQ(out.kind == SearchKind::Found, inst.exists) << inst.n << " " << to_string(inst.cfg);
    if (out.witness) {
      EXPECT_TRUE(oracle::is_gdd(*out.witness, inst.idx.lambda1, inst.idx.lambda2, oracle::shape_of(inst.cfg.s())));
    }
  }
}

TEST(Search, PruningSwitchesDoNotChangeOutcomes) {
  for (const auto& inst : kInstances)
    for (bool symmetry : {true, false})
      for (bool bound : {true, false}) {
        auto p = problem(inst.n, inst.cfg, inst.idx);
        p.symmetry_breaking = symmetry;
        p.pair_residual_bound = bound;
        const auto out = search(p);
        EXPECT_EQ(out.kind, inst.exists ? SearchKind::Found : SearchKind::ExhaustedNonexistent)
            << inst.n << " " << to_string(inst.cfg) << " symmetry=" << symmetry << " bound=" << bound;
      }
}

TEST(Search, SymmetryBreakingShrinksTheTree) {
  auto with = problem(8, kC24, {1, 1});
  auto without = with;
  without.symmetry_breaking = false;
  EXPECT_LT(search(with).stats.nodes, search(without).stats.nodes);
}

TEST(Search, ParallelModeReachesTheSameVerdict) {
  auto p = problem(8, kC24, {1, 1});
  p.deterministic = false;
  p.threads = 2;
  EXPECT_EQ(search(p).kind, SearchKind::ExhaustedNonexistent);
  auto q = problem(5, kC15, {5, 2});
  q.deterministic = false;
  q.threads = 2;
  EXPECT_EQ(search(q).kind, SearchKind::Found);
}

TEST(Search, BudgetExhaustion) {
  auto p = problem(8, kC24, {1, 1});
  p.budget = 10;
  const auto out = search(p);
  EXPECT_EQ(out.kind, SearchKind::BudgetExhausted);
  EXPECT_LE(out.stats.nodes, 10u);
}

TEST(Search, InfeasibleInputIsRejectedBeforeSearching) {
  try {
    search(problem(10, kC33, {1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfeasibleInput);
  }
}

TEST(Search, CandidateBlocksMatchTheSplit) {
  EXPECT_EQ(candidate_blocks(problem(4, kC33, {8, 9})).size(), 16u);
  EXPECT_EQ(candidate_blocks(problem(5, kC24, {35, 32})).size(), 100u);
  for (const auto& b : candidate_blocks(problem(5, kC15, {5, 2}))) {
    const int a = b.count(Group::A);
    EXPECT_TRUE(a == 1 || a == 5);
  }
}

TEST(Search, CompletesAPartialDesign) {
  auto kept = corrected_gdd6();
  kept.blocks.pop_back();
  const auto out = complete_by_search(kept, kC33, {4, 5}, 1'000'000);
  ASSERT_EQ(out.kind, SearchKind::Found);
  EXPECT_TRUE(verify_gdd(*out.witness, {6, 4, 5, Configuration{3, 3}}).pass);
}

TEST(Search, RepairsThePublishedSixPointDesign) {
  const auto r = repair_by_search(published_gdd6(), kC33, {4, 5}, 1'000'000);
  EXPECT_FALSE(r.discrepancies.empty());
  ASSERT_TRUE(r.removed.has_value());
  ASSERT_EQ(r.outcome.kind, SearchKind::Found);
  EXPECT_TRUE(verify_gdd(*r.outcome.witness, {6, 4, 5, Configuration{3, 3}}).pass);
  EXPECT_EQ(r.outcome.witness->blocks, canonicalize(corrected_gdd6()).blocks);
}

TEST(Search, CrossValidationFindsNoConflict) {
  const auto report = cross_validate(kC33, 4, 200'000);
  EXPECT_TRUE(report.consistent());
  EXPECT_FALSE(report.entries.empty());
  const auto report24 = cross_validate(kC24, 4, 200'000);
  EXPECT_TRUE(report24.consistent());
}
