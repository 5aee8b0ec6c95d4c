// Copyright 2026 The circdd Authors.
//
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
#include <fstream>
#include <sstream>

#include "circdd/records.hpp"
#include "circdd_cli.hpp"

namespace circdd::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path TempPath(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("circdd_cli_" + name);
}

TEST(Cli, VerifiesASet) {
  const auto r = RunCli({"verify", "--set", "104;1,16,20,27", "--expect-diam", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "diameter 3, degree 8\n");
}

TEST(Cli, VerifyMismatchIsADomainError) {
  const auto r = RunCli({"verify", "--set", "104;1,16,20,27", "--expect-diam", "4"});
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_NE(r.err.find("diameter"), std::string::npos);
}

TEST(Cli, SingleBound) {
  const auto r = RunCli({"bounds", "--deg", "8", "--diam", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "681\n");
  EXPECT_EQ(RunCli({"bounds", "--deg", "6", "--diam", "4", "--kind", "triple"}).out, "117\n");
  EXPECT_EQ(RunCli({"bounds", "--deg", "3", "--diam", "2", "--kind", "moore"}).out, "10\n");
}

TEST(Cli, BoundGridCsv) {
  const auto r = RunCli({"bounds", "--deg-max", "16", "--dmax", "10"});
  EXPECT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string header, first, last, line;
  std::getline(lines, header);
  std::getline(lines, first);
  while (std::getline(lines, line)) last = line;
  EXPECT_EQ(header, "deg,D=2,D=3,D=4,D=5,D=6,D=7,D=8,D=9,D=10");
  EXPECT_EQ(first, "3,8,12,16,20,24,28,32,36,40");
  EXPECT_EQ(last, "16,145,833,3649,13073,40081,108545,265729,598417,1256465");
}

TEST(Cli, SearchWithoutSolutions) {
  const auto r = RunCli({"--threads", "2", "search", "--n", "14", "--deg", "4", "--diam", "2", "--all",
                         "--free-s1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "no solutions\n");
}

TEST(Cli, SearchListsSortedSolutions) {
  const auto r = RunCli({"search", "--n", "13", "--deg", "4", "--diam", "2", "--all", "--free-s1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "13;1,5\n13;2,3\n13;4,6\n");
  const auto c = RunCli(
      {"search", "--n", "13", "--deg", "4", "--diam", "2", "--all", "--free-s1", "--collapse"});
  EXPECT_EQ(c.out, "13;1,5\n");
}

TEST(Cli, SearchWithPruneFile) {
  const auto cfg = TempPath("prune.cfg");
  std::ofstream(cfg) << "k 1\ns1 fixed\n1 1 0\n";
  const auto r = RunCli({"search", "--n", "13", "--deg", "4", "--diam", "2", "--prune-file", cfg.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "no solutions\n");
  std::filesystem::remove(cfg);
}

TEST(Cli, OddDegreeWithOddOrderNamesTheError) {
  const auto r = RunCli({"search", "--n", "13", "--deg", "5", "--diam", "2"});
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_NE(r.err.find("ParityError"), std::string::npos);
}

TEST(Cli, MaxSearch) {
  const auto r = RunCli({"maxsearch", "--deg", "4", "--diam", "2", "--from", "5", "--to", "13"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "13 13;1,5\n");
}

TEST(Cli, OracleAgreesWithSearch) {
  EXPECT_EQ(RunCli({"oracle", "--n", "13", "--deg", "4", "--diam", "2"}).out, "13;1,5\n13;2,3\n13;4,6\n");
  EXPECT_EQ(RunCli({"oracle", "--n", "10", "--deg", "3", "--diam", "2"}).out, "no solutions\n");
}

TEST(Cli, Product) {
  const auto r = RunCli({"product", "4;1", "3;1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "12;3,4\ndegree 4, diameter 3 (measured)\n");
  const auto bad = RunCli({"product", "4;1", "6;1"});
  EXPECT_EQ(bad.code, kExitDomainError);
  EXPECT_NE(bad.err.find("NotCoprime"), std::string::npos);
}

TEST(Cli, CombineFallsBackToTheSeedTable) {
  const auto missing = TempPath("missing.json");
  std::filesystem::remove(missing);
  const auto r = RunCli({"--records", missing.string(), "combine", "--deg", "10", "--diam", "6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("1533 = 3 x 511\n", 0), 0u);
  EXPECT_NE(r.err.find("not found"), std::string::npos);
}

TEST(Cli, SeedVerifyAndTable) {
  const auto path = TempPath("records.json");
  std::filesystem::remove(path);
  EXPECT_EQ(RunCli({"--records", path.string(), "--seed-builtin"}).code, kExitOk);
  ASSERT_TRUE(std::filesystem::exists(path));

  const auto v = RunCli({"--records", path.string(), "verify", "--cell", "8,3"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_NE(v.out.find("(8,3) 104 ok"), std::string::npos);
  const auto all = RunCli({"--records", path.string(), "verify"});
  EXPECT_EQ(all.code, kExitOk);
  EXPECT_NE(all.out.find("0 mismatched"), std::string::npos);

  const auto csv1 = RunCli({"--records", path.string(), "--format", "csv", "table"});
  const auto csv2 = RunCli({"--records", path.string(), "--format", "csv", "table"});
  EXPECT_EQ(csv1.code, kExitOk);
  EXPECT_EQ(csv1.out, csv2.out);
  EXPECT_FALSE(csv1.out.empty());
  std::filesystem::remove(path);
}

TEST(Cli, FitAndGridOutputs) {
  const auto fit = TempPath("fit.json");
  const auto r = RunCli({"fit", "--what", "bounds", "--log", "--out", fit.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(std::filesystem::exists(fit));
  EXPECT_NE(r.err.find("R^2"), std::string::npos);
  std::filesystem::remove(fit);

  const auto g1 = RunCli({"grid", "--what", "diff"});
  const auto g2 = RunCli({"grid", "--what", "diff"});
  EXPECT_EQ(g1.code, kExitOk);
  EXPECT_EQ(g1.out, g2.out);
  EXPECT_EQ(g1.out.rfind("deg,D=2", 0), 0u);
  EXPECT_EQ(RunCli({"fit", "--degree", "5"}).code, kExitUsage);
}

TEST(Cli, ProfileWritesConfigs) {
  const auto dir = TempPath("prune_dir");
  std::filesystem::remove_all(dir);
  EXPECT_EQ(RunCli({"profile", "--dir", dir.string()}).code, kExitOk);
  EXPECT_TRUE(std::filesystem::exists(dir / "deg8_diam3.cfg"));
  const auto one = RunCli({"profile", "--deg", "8", "--diam", "3"});
  EXPECT_EQ(one.code, kExitOk);
  EXPECT_NE(one.out.find("s1 fixed"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"bounds", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"bounds", "--deg", "8"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"bounds", "--deg", "8", "--diam", "3", "--dmax", "5"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"search", "--n", "13", "--deg", "4"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"verify", "--set", "13;1,5", "--published"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"bounds", "verify"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"--help"}).code, kExitOk);
}

TEST(Cli, DomainErrorsNameTheCase) {
  const auto r = RunCli({"verify", "--set", "12;0"});
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_NE(r.err.find("InvalidGenerator"), std::string::npos);
  const auto p = RunCli({"verify", "--set", "12;a"});
  EXPECT_NE(p.err.find("ParseError"), std::string::npos);
}

}  // namespace
}  // namespace circdd::cli
