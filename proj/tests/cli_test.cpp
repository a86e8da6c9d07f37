#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LIESLICE_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, CascadeJson) {
  const auto r = run("cascade --type A5 --subset all --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["elements"].size(), 3u);
  EXPECT_EQ(j["elements"][2]["eps"], (std::vector<int>{0, 0, 1, 0, 0}));
  EXPECT_EQ(j["properties"], "holds");
}

TEST(Cli, CascadeTable) {
  const auto r = run("cascade --type G2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3a1+2a2"), std::string::npos);
}

TEST(Cli, SeaweedJson) {
  const auto r = run("--format json seaweed --type A5 --s 1 --t all");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dim_q"], 21);
  EXPECT_EQ(j["qualifies"], true);
  EXPECT_EQ(j["gamma_rank"], 4);
  EXPECT_EQ(j["structure_identities"], "holds");
}

TEST(Cli, SliceBorel) {
  const auto r = run("slice --type A2 --s none --t all --format json --seed 3");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["overall"], "holds");
  EXPECT_EQ(j["stabilizer_dim_at_fa"], 1);
  EXPECT_EQ(j["index_estimate"], 1);
}

TEST(Cli, SliceNotApplicableExitsZero) {
  const auto r = run("slice --type A5 --s 3 --t all --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["overall"], "not-applicable");
}

TEST(Cli, SliceRandomStart) {
  const auto r = run("slice --type B3 --s none --t all --a random --seed 11 --samples 5 --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["samples"], 5);
}

TEST(Cli, SurveyCsv) {
  const auto r = run("survey --type A5 --class minimal-parabolic --format csv");
  ASSERT_EQ(r.code, 0);
  std::istringstream is(r.out);
  std::string line;
  int rows = 0;
  std::getline(is, line);
  EXPECT_EQ(line.rfind("type,S,T", 0), 0u);
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 5);
}

TEST(Cli, SurveyRankGuardIsUsageError) {
  EXPECT_EQ(run("survey --type A7 --class borel").code, 2);
  EXPECT_EQ(run("survey --type A7 --class borel --max-rank 7 --format json").code, 0);
}

TEST(Cli, SurveyWritesOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "lieslice_cli_test.json";
  const auto r = run("survey --type A2 --format json --verify --out " + path.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(nlohmann::json::parse(in).size(), 16u);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("cascade").code, 2);
  EXPECT_EQ(run("cascade --type Q4").code, 2);
  EXPECT_EQ(run("cascade --type D3").code, 2);
  EXPECT_EQ(run("cascade --type A3 --subset 4").code, 2);
  EXPECT_EQ(run("cascade --type A3 --subset 1,x").code, 2);
  EXPECT_EQ(run("cascade --type A3 --subset 1,1").code, 2);
  EXPECT_EQ(run("cascade --type A3 --format csv").code, 2);
  EXPECT_EQ(run("cascade --type A3 --format xml").code, 2);
  EXPECT_EQ(run("slice --type A2 --a sometimes").code, 2);
  EXPECT_EQ(run("survey --type A2 --class levi").code, 2);
  EXPECT_EQ(run("survey --type A2 --out /nonexistent-dir/x.json").code, 2);
}

TEST(Cli, HelpAndVersion) {
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("--version").code, 0);
}

TEST(Cli, VerifyLemmas) {
  const auto r = run("verify-lemmas --max-rank 4 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 4u);
  for (const auto& s : j) EXPECT_EQ(s["verdict"], "holds") << s["suite"];
}

TEST(Cli, IdenticalRunsAreByteIdentical) {
  const std::string args = "survey --type B2 --verify --format json --seed 77";
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}
