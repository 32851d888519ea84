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

#include <filesystem>

#include "gdd6.hpp"
#include "oracles.hpp"

using namespace gdd6;

namespace {

void expect_gdd(const Construction& c, int n, IndexPair idx, size_t blocks) {
  EXPECT_EQ(c.design.n, n);
  EXPECT_EQ(c.claim.lambda1, idx.lambda1);
  EXPECT_EQ(c.claim.lambda2, idx.lambda2);
  EXPECT_EQ(c.design.blocks.size(), blocks);
  EXPECT_TRUE(verify_gdd(c.design, c.claim).pass);
  ASSERT_TRUE(c.claim.config.has_value());
  EXPECT_TRUE(oracle::is_gdd(c.design, idx.lambda1, idx.lambda2, oracle::shape_of(c.claim.config->s)));
}

void expect_doubles(const GroupedDesign& d, const GddClaim& claim) {
  GddClaim twice = claim;
  twice.lambda1 *= 2;
  twice.lambda2 *= 2;
  EXPECT_TRUE(verify_gdd(multiply(d, 2), twice).pass);
}

}  // namespace

TEST(ThreeThree, ProductOfTripleSystems) {
  expect_gdd(product33(sts(7)), 7, {7, 9}, 49);
  expect_gdd(product33(sts(9)), 9, {12, 16}, 144);
  expect_gdd(product33(sts(3)), 3, {1, 1}, 1);
}

TEST(ThreeThree, ProductOfCompleteDesigns) {
  expect_gdd(product_kk(complete_design(5, 3)), 5, {30, 36}, 100);
  const auto wide = product_kk(complete_design(5, 4));
  EXPECT_EQ(wide.design.k, 8);
  EXPECT_TRUE(verify_gdd(wide.design, wide.claim).pass);
}

TEST(ThreeThree, KirkmanNine) {
  expect_gdd(alpha33(find_resolvable(9, 3, 1, 1)), 9, {3, 4}, 36);
  expect_gdd(alpha33(resolve(sts(7), 3)), 7, {7, 9}, 49);
}

TEST(ThreeThree, PublishedSixPointDesign) {
  EXPECT_EQ(published_gdd6().blocks.size(), 20u);
  EXPECT_FALSE(verify_gdd(published_gdd6(), {6, 4, 5, Configuration{3, 3}}).pass);
  EXPECT_TRUE(verify_gdd(corrected_gdd6(), {6, 4, 5, Configuration{3, 3}}).pass);
  int differing = 0;
  for (size_t i = 0; i < 20; ++i) differing += published_gdd6().blocks[i] != corrected_gdd6().blocks[i];
  EXPECT_EQ(differing, 1);
}

TEST(TwoFour, FixedExamples) {
  expect_gdd(gdd24_15(), 15, {15, 16}, 450);
  expect_gdd(gdd24_16mod24(affine_rbibd16()), 16, {14, 15}, 480);
  expect_gdd(gdd24_4res(provide_resolution(IngredientRequest::resolvable(5, 4, 6, 4))), 5, {35, 32}, 100);
  expect_gdd(gdd24_alpha(resolve(complete_design(6, 4), 2), one_factorization(6)), 6, {21, 20}, 90);
  expect_gdd(gdd24_alpha(provide_resolution(IngredientRequest::resolvable(4, 4, 3, 1)), one_factorization(4)), 4,
             {7, 6}, 12);
}

TEST(TwoFour, AlphaNeedsMatchingFactorization) {
  try {
    gdd24_alpha(resolve(complete_design(6, 4), 2), one_factorization(8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidIngredient);
  }
}

TEST(OneFive, FromBibds) {
  expect_gdd(gdd15_bibd(bibd5(5, 1)), 5, {5, 2}, 10);
  expect_gdd(gdd15_bibd(bibd5(11, 2)), 11, {22, 10}, 11 * 2 * 11);
  expect_gdd(gdd15_bibd(bibd5(21, 1)), 21, {21, 10}, 21 * 2 * 21);
}

TEST(OneFive, FromNearResolutionSix) { expect_gdd(gdd15_nrb(nrb6()), 6, {12, 5}, 36); }

TEST(OneFive, FromFiveResolutionNine) {
  const auto c = gdd15_5res(provide_resolution(IngredientRequest::resolvable(9, 5, 10, 5)));
  EXPECT_EQ(c.claim.lambda1, 45);
  EXPECT_EQ(c.claim.lambda2, 20);
  EXPECT_TRUE(verify_gdd(c.design, c.claim).pass);
  EXPECT_TRUE(oracle::is_gdd(c.design, 45, 20, oracle::shape_of(1)));
}

TEST(OneFive, FromImportedRbibdTwenty) {
  auto q = IngredientRequest::resolvable(20, 5, 4, 1);
  q.import_path = std::filesystem::path(GDD6_TEST_DATA) / "rbibd20_5_4.bd";
  const auto c = gdd15_rbibd(provide_resolution(q));
  EXPECT_TRUE(verify_gdd(c.design, c.claim).pass);
  EXPECT_EQ(c.claim.lambda1, 40);
  EXPECT_EQ(c.claim.lambda2, 19);
}

TEST(Plan, RejectsTooSmallN) {
  EXPECT_THROW(plan(kC33, 2), Error);
  EXPECT_THROW(plan(kC24, 3), Error);
  EXPECT_THROW(plan(kC15, 4), Error);
}

TEST(Plan, RecipeNames) {
  EXPECT_EQ(plan(kC33, 6).name, "published-gdd6");
  EXPECT_EQ(plan(kC33, 9).name, "alpha33");
  EXPECT_EQ(plan(kC24, 15).name, "gdd24_15");
  EXPECT_EQ(plan(kC24, 40).name, "gdd24_16mod24");
  EXPECT_EQ(plan(kC24, 7).name, "gdd24_4res");
  EXPECT_EQ(plan(kC24, 6).name, "gdd24_alpha");
  EXPECT_EQ(plan(kC15, 20).name, "gdd15_rbibd");
  EXPECT_EQ(plan(kC15, 16).name, "gdd15_nrb");
  EXPECT_EQ(plan(kC15, 21).name, "gdd15_bibd");
  EXPECT_EQ(plan(kC15, 10).minimality, Minimality::Other);
}

struct ConstructCase {
  ConfigClass cfg;
  int n;
};

class ConstructAll : public ::testing::TestWithParam<ConstructCase> {};

TEST_P(ConstructAll, VerifiesAtClaimedIndicesAndDoubles) {
  const auto [cfg, n] = GetParam();
  const auto result = construct(cfg, n);
  const auto recipe = plan(cfg, n);
  EXPECT_EQ(result.recipe.name, recipe.name);
  EXPECT_EQ(result.claim.lambda1, recipe.claimed.lambda1);
  EXPECT_EQ(result.claim.lambda2, recipe.claimed.lambda2);
  EXPECT_EQ(result.claim.config, cfg.configuration());
  EXPECT_TRUE(verify_gdd(result.design, result.claim).pass);
  EXPECT_TRUE(oracle::is_gdd(result.design, result.claim.lambda1, result.claim.lambda2, oracle::shape_of(cfg.s())));
  expect_doubles(result.design, result.claim);
  if (cfg == kC33) EXPECT_EQ(recipe.claimed, minimal_indices(cfg, n));
}

std::string case_name(const ::testing::TestParamInfo<ConstructCase>& info) {
  return "c" + std::to_string(info.param.cfg.s()) + std::to_string(info.param.cfg.t()) + "_n" +
         std::to_string(info.param.n);
}

INSTANTIATE_TEST_SUITE_P(ThreeThree, ConstructAll,
                         ::testing::Values(ConstructCase{kC33, 3}, ConstructCase{kC33, 4}, ConstructCase{kC33, 5},
                                           ConstructCase{kC33, 6}, ConstructCase{kC33, 7}, ConstructCase{kC33, 8},
                                           ConstructCase{kC33, 9}, ConstructCase{kC33, 10}, ConstructCase{kC33, 11},
                                           ConstructCase{kC33, 12}, ConstructCase{kC33, 13}, ConstructCase{kC33, 15}),
                         case_name);

INSTANTIATE_TEST_SUITE_P(TwoFour, ConstructAll,
                         ::testing::Values(ConstructCase{kC24, 4}, ConstructCase{kC24, 5}, ConstructCase{kC24, 6},
                                           ConstructCase{kC24, 7}, ConstructCase{kC24, 8}, ConstructCase{kC24, 9},
                                           ConstructCase{kC24, 11}, ConstructCase{kC24, 13}, ConstructCase{kC24, 15},
                                           ConstructCase{kC24, 16}),
                         case_name);

INSTANTIATE_TEST_SUITE_P(OneFive, ConstructAll,
                         ::testing::Values(ConstructCase{kC15, 5}, ConstructCase{kC15, 6}, ConstructCase{kC15, 7},
                                           ConstructCase{kC15, 8}, ConstructCase{kC15, 9}, ConstructCase{kC15, 10},
                                           ConstructCase{kC15, 11}, ConstructCase{kC15, 13}, ConstructCase{kC15, 15},
                                           ConstructCase{kC15, 21}, ConstructCase{kC15, 25}),
                         case_name);

TEST(Construct, UnavailableIngredientKeepsTheRoute) {
  ConstructOptions options;
  options.budget = 2000;
  try {
    construct(kC15, 20, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IngredientUnavailable);
    const std::string msg = e.message();
    EXPECT_EQ(msg.rfind("n=20 = 0 mod 10", 0), 0u) << msg;
    EXPECT_NE(msg.find("RBIBD(20,5,4) unavailable"), std::string::npos) << msg;
  }
}

TEST(Construct, ImportSuppliesTheMissingIngredient) {
  ConstructOptions options;
  options.import_path = std::filesystem::path(GDD6_TEST_DATA) / "rbibd20_5_4.bd";
  const auto result = construct(kC15, 20, options);
  EXPECT_TRUE(verify_gdd(result.design, result.claim).pass);
  EXPECT_EQ(result.recipe.minimality, Minimality::Minimal);
}
