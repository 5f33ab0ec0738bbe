// Copyright 2026 The Graphstar Authors
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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace graphstar::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

int Lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("graphstar_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  void Write(const std::string& name, const std::string& text) const { std::ofstream(Path(name)) << text; }

  std::filesystem::path dir_;
};

TEST_F(CliTest, Compose) {
  const Result r = Invoke({"compose", "m=2;n=1;v1:B1,B2", "m=2;n=1;v1:B1,B2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(Lines(r.out), 4);
  EXPECT_NE(r.out.find("+1  m=3;n=2;v1:B1,B2;v2:B1,B3"), std::string::npos);
  EXPECT_EQ(Invoke({"compose", "b1", "b1"}).out, r.out);
}

TEST_F(CliTest, CoproductAndAntipode) {
  const Result r = Invoke({"coproduct", "m=3;n=2;v1:B1,V2;v2:B2,B3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "-1  m=2;n=1;v1:B1,B2  (x)  m=2;n=1;v1:B1,B2\n"
            "+1  m=2;n=2;v1:B1,B2;v2:B1,V1  (x)  m=2;n=0\n");
  EXPECT_EQ(Invoke({"coproduct", "--kind", "generic", "t2L"}).out, r.out);
  const Result s = Invoke({"antipode", "t2L"});
  EXPECT_EQ(s.code, kOk);
  EXPECT_EQ(Lines(s.out), 3);
  EXPECT_EQ(Invoke({"merge", "c2"}).out, "+1  m=2;n=2;v1:B1,B2;v2:B1,V1\n-1  m=2;n=2;v1:B1,B2;v2:B2,V1\n");
}

TEST_F(CliTest, Enumerate) {
  const Result r = Invoke({"enumerate", "2", "2", "full"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(Lines(r.out), 3);
  EXPECT_EQ(Lines(Invoke({"enumerate", "3", "3", "forest"}).out), 70);
  const Result j = Invoke({"--format", "json", "enumerate", "3", "2"});
  EXPECT_EQ(nlohmann::json::parse(j.out).size(), 13u);
}

TEST_F(CliTest, SolveOrderTwoFull) {
  const Result r = Invoke({"solve", "--max-order", "2", "--restrict", "full"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("order 2: unique"), std::string::npos);
  EXPECT_NE(r.out.find("1  m=2;n=2;v1:B1,B2;v2:B1,V1\n"), std::string::npos);
  const Result j = Invoke({"solve", "--max-order", "2", "--restrict", "full", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc.at("report").at(1).at("status"), "unique");
  for (const auto& v : doc.at("values")) EXPECT_EQ(v.at("weight"), "1");
}

TEST_F(CliTest, SolveOutputIsThreadIndependent) {
  const Result one = Invoke({"--threads", "1", "solve", "--max-order", "3", "--format", "json"});
  const Result three = Invoke({"--threads", "3", "solve", "--max-order", "3", "--format", "json"});
  EXPECT_EQ(one.out, three.out);
}

TEST_F(CliTest, InfeasiblePinsExitThree) {
  const Result r = Invoke({"solve", "--max-order", "2", "--restrict", "full", "--normalize", "b2L=5"});
  EXPECT_EQ(r.code, kInfeasible);
  EXPECT_NE(r.err.find("infeasible"), std::string::npos);
  EXPECT_NE(r.out.find("restriction forest"), std::string::npos);
}

TEST_F(CliTest, NormalizeAcceptsGraphText) {
  const Result r = Invoke({"solve", "--max-order", "1", "--normalize", "m=2;n=1;v1:B1,B2=3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("3  m=2;n=1;v1:B1,B2"), std::string::npos);
}

TEST_F(CliTest, StarWithFiles) {
  Write("const12.json", R"({"dim":2,"entries":{"1,2":"1"}})");
  ASSERT_EQ(Invoke({"solve", "--max-order", "2", "--restrict", "full", "--format", "json", "--out", Path("w.json")}).code,
            kOk);
  const Result r = Invoke({"star", "--alpha", Path("const12.json"), "--weights", Path("w.json"), "--order", "2", "--f",
                        "x1^2", "--g", "x2^2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "x1^2*x2^2 + eps*(4*x1*x2) + eps^2*(2)\n");
  const Result short_weights = Invoke({"star", "--alpha", Path("const12.json"), "--weights", Path("w.json"), "--order",
                                    "3", "--f", "x1", "--g", "x2"});
  EXPECT_EQ(short_weights.code, kUsage);
}

TEST_F(CliTest, ConfigFile) {
  Write("run.ini", "max-order=2\nrestrict=full\nformat=json\n");
  const Result r = Invoke({"--config", Path("run.ini"), "solve"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("restriction"), "full");
  EXPECT_EQ(nlohmann::json::parse(r.out).at("orders"), 2);
}

TEST_F(CliTest, VerifySuites) {
  for (const char* suite : {"appendix", "duality", "prelie", "moyal", "antipode", "trees"}) {
    const Result r = Invoke({"verify", suite});
    EXPECT_EQ(r.code, kOk) << suite << "\n" << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  }
}

TEST_F(CliTest, VerifyReportsFailuresWithExpectedAndGot) {
  Write("bad.txt", "demo/bad ; compose ; b0 b1 ; +b1R -b1L\n");
  const Result r = Invoke({"verify", "appendix", "--data", Path("bad.txt")});
  EXPECT_EQ(r.code, kVerifyFailed);
  EXPECT_NE(r.out.find("FAIL  demo/bad"), std::string::npos);
  EXPECT_NE(r.out.find("expected:"), std::string::npos);
  EXPECT_NE(r.out.find("got:"), std::string::npos);
}

TEST_F(CliTest, UsageAndParseErrors) {
  EXPECT_EQ(Invoke({}).code, kUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(Invoke({"compose", "b1"}).code, kUsage);
  EXPECT_EQ(Invoke({"compose", "m=2;n=1;v1:B1,B1", "b1"}).code, kUsage);
  EXPECT_EQ(Invoke({"compose", "nonsense", "b1"}).code, kUsage);
  EXPECT_EQ(Invoke({"enumerate", "2", "5"}).code, kUsage);
  EXPECT_EQ(Invoke({"--restrict", "linear", "solve"}).code, kUsage);
  EXPECT_EQ(Invoke({"verify", "everything"}).code, kUsage);
  EXPECT_EQ(Invoke({"star", "--alpha", "so3", "--f", "x1 +", "--g", "x2"}).code, kUsage);
  EXPECT_EQ(Invoke({"star", "--alpha", "missing.json", "--f", "x1", "--g", "x2"}).code, kUsage);
  const Result r = Invoke({"compose", "m=2;n=1;v1:B1;B2", "b1"});
  EXPECT_NE(r.err.find("position"), std::string::npos);
}

TEST_F(CliTest, HelpExitsCleanly) {
  const Result r = Invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

}  // namespace
}  // namespace graphstar::cli
