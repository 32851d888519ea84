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
#include <sstream>

#include "cli_commands.hpp"

using namespace gdd6;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gdd6");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("gdd6_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

const std::string kRbibd20 = std::string(GDD6_TEST_DATA) + "/rbibd20_5_4.bd";

}  // namespace

TEST(ExitCodes, EveryOutcomeHasExactlyOneCode) {
  for (int k = 0; k <= static_cast<int>(ErrorKind::Io); ++k) {
    const int code = cli::exit_code_for(static_cast<ErrorKind>(k));
    EXPECT_GE(code, 1);
    EXPECT_LE(code, 5);
  }
  EXPECT_EQ(cli::exit_code_for(ErrorKind::InfeasibleInput), 2);
  EXPECT_EQ(cli::exit_code_for(ErrorKind::IngredientUnavailable), 3);
  EXPECT_EQ(cli::exit_code_for(ErrorKind::BudgetExhausted), 4);
  EXPECT_EQ(cli::exit_code_for(ErrorKind::Parse), 5);
  EXPECT_EQ(cli::exit_code_for(SearchKind::Found), 0);
  EXPECT_EQ(cli::exit_code_for(SearchKind::ExhaustedNonexistent), 1);
  EXPECT_EQ(cli::exit_code_for(SearchKind::BudgetExhausted), 4);
}

TEST(Feasibility, Examples) {
  const auto bad = run({"feasibility", "--n", "10", "--l1", "1", "--l2", "2"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("[FAIL] l2<=2l1(n-1)/n"), std::string::npos) << bad.out;
  EXPECT_EQ(run({"feasibility", "--n", "6", "--config", "3,3", "--l1", "4", "--l2", "5"}).code, 0);
  const auto eight = run({"feasibility", "--n", "8", "--config", "2,4", "--l1", "1", "--l2", "1"});
  EXPECT_EQ(eight.code, 0);
  EXPECT_NE(eight.out.find("necessary only"), std::string::npos);
}

TEST(Usage, MalformedArgumentsExitFive) {
  EXPECT_EQ(run({"feasibility", "--n", "ten", "--l1", "1", "--l2", "2"}).code, 5);
  EXPECT_EQ(run({"feasibility", "--n", "10"}).code, 5);
  EXPECT_EQ(run({"construct", "--config", "3,4", "--n", "9"}).code, 5);
  EXPECT_EQ(run({"construct", "--config", "3,3", "--n", "2"}).code, 5);
  EXPECT_EQ(run({"tables", "minimal42"}).code, 5);
  EXPECT_EQ(run({}).code, 5);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, ConstructThenVerify) {
  const auto c = run({"construct", "--config", "3,3", "--n", "9", "--out", path("c9.gdd")});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("label: Minimal"), std::string::npos);
  EXPECT_NE(c.out.find("blocks: 36"), std::string::npos);
  const auto file = read_design_file(path("c9.gdd"));
  EXPECT_EQ(file.design.blocks.size(), 36u);
  const auto v = run({"verify", path("c9.gdd")});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("counted: lambda1=3 lambda2=4"), std::string::npos) << v.out;
}

TEST_F(CliTest, ConstructWritesToStdoutWithoutOut) {
  const auto c = run({"construct", "--config", "2,4", "--n", "15"});
  ASSERT_EQ(c.code, 0);
  EXPECT_NE(c.err.find("label: Minimal"), std::string::npos);
  const auto parsed = parse_design(c.out);
  EXPECT_EQ(parsed.design.blocks.size(), 450u);
}

TEST_F(CliTest, VerifyDetectsADuplicatedBlock) {
  ASSERT_EQ(run({"construct", "--config", "3,3", "--n", "7", "--out", path("c7.gdd")}).code, 0);
  auto text = read_text_file(path("c7.gdd"));
  const auto first_block = text.find("\nB ") + 1;
  const auto line = text.substr(first_block, text.find('\n', first_block) - first_block + 1);
  write_text_file(path("dup.gdd"), text + line);
  const auto v = run({"verify", path("dup.gdd")});
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("pair discrepancies"), std::string::npos);
}

TEST_F(CliTest, VerifyPinpointsThePublishedSixPointTypo) {
  write_design_file(path("published.gdd"), published_gdd6(), {6, 4, 5, Configuration{3, 3}});
  const auto v = run({"verify", path("published.gdd")});
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("pair discrepancies: " + std::to_string(pair_discrepancies(published_gdd6(), {6, 4, 5, {}}).size())),
            std::string::npos)
      << v.out;
  write_design_file(path("corrected.gdd"), corrected_gdd6(), {6, 4, 5, Configuration{3, 3}});
  EXPECT_EQ(run({"verify", path("corrected.gdd")}).code, 0);
}

TEST_F(CliTest, VerifyParseErrorNamesTheLine) {
  write_text_file(path("bad.gdd"), "%GDD 1\nparam n=3 groups=2 k=6\nindex lambda1=1 lambda2=1\nconfig 3,3\nB A0 A1\nB A9\n");
  const auto v = run({"verify", path("bad.gdd")});
  EXPECT_EQ(v.code, 5);
  EXPECT_NE(v.err.find("line 6"), std::string::npos) << v.err;
  EXPECT_EQ(run({"verify", path("missing.gdd")}).code, 5);
}

TEST_F(CliTest, VerifyAgainstAnExplicitClaim) {
  ASSERT_EQ(run({"construct", "--config", "3,3", "--n", "9", "--out", path("c9.gdd")}).code, 0);
  EXPECT_EQ(run({"verify", path("c9.gdd"), "--l1", "3", "--l2", "4", "--config", "3,3"}).code, 0);
  EXPECT_EQ(run({"verify", path("c9.gdd"), "--l1", "6", "--l2", "8"}).code, 1);
  EXPECT_EQ(run({"verify", path("c9.gdd"), "--config", "2,4"}).code, 1);
}

TEST_F(CliTest, SearchExamples) {
  EXPECT_EQ(run({"search", "--n", "8", "--config", "2,4", "--l1", "1", "--l2", "1"}).code, 1);
  const auto found = run({"search", "--n", "5", "--config", "1,5", "--l1", "5", "--l2", "2", "--out", path("s.gdd")});
  EXPECT_EQ(found.code, 0);
  EXPECT_EQ(run({"verify", path("s.gdd")}).code, 0);
  EXPECT_EQ(run({"search", "--n", "8", "--config", "2,4", "--l1", "1", "--l2", "1", "--budget", "10"}).code, 4);
  EXPECT_EQ(run({"search", "--n", "10", "--config", "3,3", "--l1", "1", "--l2", "2"}).code, 2);
  EXPECT_EQ(run({"search", "--n", "8", "--config", "2,4", "--l1", "1", "--l2", "1", "--nondeterministic", "--threads", "2"}).code,
            1);
}

TEST_F(CliTest, UnavailableIngredientExitsThreeUntilImported) {
  const auto missing = run({"construct", "--config", "1,5", "--n", "20", "--budget", "2000"});
  EXPECT_EQ(missing.code, 3);
  EXPECT_NE(missing.err.find("RBIBD(20,5,4)"), std::string::npos) << missing.err;
  EXPECT_NE(missing.err.find("--import"), std::string::npos);
  const auto ok = run({"construct", "--config", "1,5", "--n", "20", "--import", kRbibd20, "--out", path("c20.gdd")});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(run({"verify", path("c20.gdd"), "--l1", "40", "--l2", "19", "--config", "1,5"}).code, 0);
  EXPECT_EQ(run({"construct", "--config", "1,5", "--n", "20", "--import", path("absent.bd")}).code, 5);
}

TEST(Tables, AllTablesPrint) {
  for (const char* which : {"residue", "minimal33", "minimal24", "minimal15", "summary24", "summary15"}) {
    const auto r = run({"tables", which, "--diff-paper"});
    EXPECT_EQ(r.code, 0) << which;
    EXPECT_NE(r.out.find("diffs against the published table"), std::string::npos);
  }
  EXPECT_NE(run({"tables", "minimal33"}).out.find("n=5 mod 6 | 3n | 9(n-1)/2"), std::string::npos);
  EXPECT_NE(run({"tables", "minimal24", "--diff-paper"}).out.find("published table: 0"), std::string::npos);
  EXPECT_NE(run({"tables", "residue", "--diff-paper"}).out.find("published table: " + std::to_string(diff_residue_table().size())),
            std::string::npos);
}

TEST_F(CliTest, CatalogStoresAndReverifies) {
  const std::string cat = path("catalog");
  ASSERT_EQ(run({"construct", "--config", "3,3", "--n", "7", "--out", path("c7.gdd"), "--catalog", cat}).code, 0);
  ASSERT_EQ(run({"construct", "--config", "1,5", "--n", "6", "--out", path("c6.gdd"), "--catalog", cat}).code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir_ / "catalog" / "c33-n7" / "7-9.gdd"));
  EXPECT_TRUE(std::filesystem::exists(dir_ / "catalog" / "c15-n6" / "12-5.gdd"));
  const auto list = run({"catalog", "list", "--dir", cat});
  EXPECT_NE(list.out.find("c33-n7/7-9.gdd alpha33"), std::string::npos) << list.out;
  EXPECT_EQ(run({"catalog", "check", "--dir", cat}).code, 0);
  const auto got = run({"catalog", "get", "--dir", cat, "--config", "3,3", "--n", "7", "--l1", "7", "--l2", "9"});
  EXPECT_EQ(got.code, 0);
  EXPECT_EQ(got.out, read_text_file(path("c7.gdd")));

  const auto stored = dir_ / "catalog" / "c33-n7" / "7-9.gdd";
  auto text = read_text_file(stored);
  const auto pos = text.rfind("A");
  text[pos + 1] = text[pos + 1] == '0' ? '1' : '0';
  write_text_file(stored, text);
  const auto check = run({"catalog", "check", "--dir", cat});
  EXPECT_EQ(check.code, 1);
  EXPECT_NE(check.out.find("corrupt c33-n7/7-9.gdd"), std::string::npos) << check.out;
  EXPECT_NE(check.out.find("valid c15-n6/12-5.gdd"), std::string::npos);
  EXPECT_EQ(run({"catalog", "get", "--dir", cat, "--config", "3,3", "--n", "7", "--l1", "7", "--l2", "9"}).code, 1);
}

TEST_F(CliTest, CatalogRejectsUnverifiedDesigns) {
  write_design_file(path("published.gdd"), published_gdd6(), {6, 4, 5, Configuration{3, 3}});
  EXPECT_EQ(run({"catalog", "add", "--dir", path("catalog"), "--file", path("published.gdd")}).code, 1);
  write_design_file(path("corrected.gdd"), corrected_gdd6(), {6, 4, 5, Configuration{3, 3}});
  EXPECT_EQ(run({"catalog", "add", "--dir", path("catalog"), "--file", path("corrected.gdd")}).code, 0);
  Catalog catalog(path("catalog"));
  const auto manifest = catalog.read_manifest();
  ASSERT_EQ(manifest.size(), 1u);
  EXPECT_EQ(manifest[0].recipe, "imported");
  const auto read = catalog.load({kC33, 6, {4, 5}});
  ASSERT_TRUE(read.has_value());
  EXPECT_EQ(read->status, EntryStatus::Valid);
}

TEST_F(CliTest, CatalogFilesAreAuthoritativeOverTheManifest) {
  Catalog catalog(path("catalog"));
  catalog.store(corrected_gdd6(), {6, 4, 5, Configuration{3, 3}}, "published-gdd6");
  std::filesystem::remove(dir_ / "catalog" / "manifest.json");
  const auto scan = catalog.scan();
  ASSERT_EQ(scan.size(), 1u);
  EXPECT_EQ(scan[0].status, EntryStatus::Valid);
  write_text_file(dir_ / "catalog" / "c33-n6" / "1-1.gdd", read_text_file(dir_ / "catalog" / "c33-n6" / "4-5.gdd"));
  const auto mismatched = catalog.load({kC33, 6, {1, 1}});
  ASSERT_TRUE(mismatched.has_value());
  EXPECT_EQ(mismatched->status, EntryStatus::Corrupt);
}
