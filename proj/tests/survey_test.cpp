#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "lieslice/survey.hpp"

using namespace lieslice;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(SurveyPairs, ClassSizesAndOrder) {
  EXPECT_EQ(survey_pairs(3, PairClass::All).size(), 64u);
  EXPECT_EQ(survey_pairs(3, PairClass::Borel).size(), 2u);
  EXPECT_EQ(survey_pairs(3, PairClass::MinimalParabolic).size(), 3u);
  EXPECT_EQ(survey_pairs(3, PairClass::Parabolic).size(), 8u);
  const auto all = survey_pairs(2, PairClass::All);
  EXPECT_EQ(all[1], std::make_pair(SimpleSet(0), SimpleSet(1)));
  EXPECT_EQ(all[4], std::make_pair(SimpleSet(1), SimpleSet(0)));
}

TEST(Survey, A5MinimalParabolics) {
  const auto recs = survey(TypeSpec::parse("A5"), PairClass::MinimalParabolic, false, 0);
  ASSERT_EQ(recs.size(), 5u);
  int qualifying = 0;
  for (const auto& r : recs) {
    qualifying += r.qualifies;
    EXPECT_EQ(r.t, (std::vector<int>{1, 2, 3, 4, 5}));
    if (!r.qualifies) {
      EXPECT_EQ(r.s, (std::vector<int>{3}));
    }
    EXPECT_FALSE(r.verified());
  }
  EXPECT_EQ(qualifying, 4);
}

TEST(Survey, BorelsAlwaysQualify) {
  for (const char* t : {"A2", "B3", "C3", "D4", "G2", "F4", "A1xB2"}) {
    const auto recs = survey(TypeSpec::parse(t), PairClass::Borel, true, 1);
    ASSERT_EQ(recs.size(), 2u);
    for (const auto& r : recs) {
      EXPECT_TRUE(r.qualifies) << t;
      EXPECT_EQ(r.overall, Status::Holds) << t;
      EXPECT_EQ(r.index_estimate, r.dim_w) << t;
    }
  }
}

TEST(Survey, FullPairNeverQualifies) {
  for (const char* t : {"A3", "B2", "G2", "C3"}) {
    const auto recs = survey(TypeSpec::parse(t), PairClass::All, false, 0);
    const auto& last = recs.back();  // S = T = Π
    EXPECT_EQ(last.s.size(), static_cast<std::size_t>(TypeSpec::parse(t).rank()));
    EXPECT_EQ(last.s, last.t);
    EXPECT_FALSE(last.qualifies) << t;
  }
}

TEST(Survey, TransposeMirrorsQualifies) {
  for (const char* t : {"A3", "B3", "C3", "G2"}) {
    const auto recs = survey(TypeSpec::parse(t), PairClass::All, false, 0);
    std::map<std::pair<std::vector<int>, std::vector<int>>, bool> q;
    for (const auto& r : recs) q[{r.s, r.t}] = r.qualifies;
    for (const auto& r : recs) EXPECT_EQ(r.qualifies, (q.at({r.t, r.s}))) << t;
  }
}

TEST(Survey, RankGuard) {
  EXPECT_THROW(survey(TypeSpec::parse("A7"), PairClass::Borel, false, 0), RankGuardError);
  EXPECT_THROW(survey(TypeSpec::parse("A3"), PairClass::Borel, false, 0, 2), RankGuardError);
  EXPECT_EQ(survey(TypeSpec::parse("A7"), PairClass::Borel, false, 0, 7).size(), 2u);
}

TEST(Survey, DeterministicBytes) {
  const auto spec = TypeSpec::parse("B2");
  for (auto fmt : {ReportFormat::Json, ReportFormat::Csv, ReportFormat::Table}) {
    const auto a = report_string(survey(spec, PairClass::All, true, 5), fmt);
    const auto b = report_string(survey(spec, PairClass::All, true, 5), fmt);
    EXPECT_EQ(a, b);
  }
}

TEST(Report, EmptyJsonIsEmptyArray) { EXPECT_EQ(report_string({}, ReportFormat::Json), "[]\n"); }

TEST(Report, CsvHeaderPlusRows) {
  auto recs = survey(TypeSpec::parse("A3"), PairClass::Parabolic, false, 0);
  recs.resize(1);
  const auto l = lines(report_string(recs, ReportFormat::Csv));
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0].rfind("type,S,T,dim_q,", 0), 0u);
  EXPECT_EQ(l[1].rfind("A3,,\"1,2,3\",", 0), 0u);
}

TEST(Report, A2FullSurveyHasSixteenElements) {
  const auto json = nlohmann::json::parse(report_string(survey(TypeSpec::parse("A2"), PairClass::All, false, 0),
                                                        ReportFormat::Json));
  ASSERT_TRUE(json.is_array());
  EXPECT_EQ(json.size(), 16u);
}

TEST(Report, FrozenFieldNames) {
  const auto j = to_json(survey(TypeSpec::parse("A1"), PairClass::Borel, false, 0)[0]);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"type", "S", "T", "dim_q", "gamma_size", "gamma0_size", "gamma_rank",
                                            "qualifies", "verified", "overall", "r_equals_stabilizer", "transversal",
                                            "stabilizer_containment", "dim_count", "torus_levi", "dim_w",
                                            "index_estimate", "attempts", "seed", "version"}));
}

TEST(Report, JsonRoundTrip) {
  for (bool verify : {false, true}) {
    const auto recs = survey(TypeSpec::parse("C3"), PairClass::Parabolic, verify, 12345678901234ULL);
    const auto back = records_from_json(report_string(recs, ReportFormat::Json));
    EXPECT_EQ(back, recs);
  }
}

TEST(Report, TableIsAligned) {
  const auto l = lines(report_string(survey(TypeSpec::parse("A2"), PairClass::All, false, 0), ReportFormat::Table));
  ASSERT_EQ(l.size(), 17u);
  const auto col = l[0].find("dim_q");
  for (const auto& line : l) EXPECT_NE(line.size(), 0u);
  EXPECT_NE(col, std::string::npos);
  for (std::size_t i = 1; i < l.size(); ++i) EXPECT_NE(l[i][col], ' ');
}

TEST(Report, WritesFilesAndRejectsUnwritable) {
  const auto path = std::filesystem::temp_directory_path() / "lieslice_survey_test.json";
  const auto recs = survey(TypeSpec::parse("A2"), PairClass::Borel, false, 0);
  emit_report(recs, ReportFormat::Json, path.string());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(records_from_json(ss.str()), recs);
  std::filesystem::remove(path);
  EXPECT_THROW(emit_report(recs, ReportFormat::Json, "/nonexistent-dir/x/report.json"), std::runtime_error);
}

TEST(Report, ParsingErrors) {
  EXPECT_THROW(parse_report_format("xml"), std::invalid_argument);
  EXPECT_THROW(parse_pair_class("levi"), std::invalid_argument);
  EXPECT_THROW(records_from_json("{}"), std::invalid_argument);
  EXPECT_THROW(parse_status("maybe"), std::invalid_argument);
}
