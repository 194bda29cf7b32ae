#include <gtest/gtest.h>

#include "isofact/report.hpp"

using namespace isofact;

TEST(Json, LargeIntegersBecomeStrings) {
  EXPECT_TRUE(report::integer(Int{1} << 53).is_number_integer());
  EXPECT_TRUE(report::integer((Int{1} << 53) + 1).is_string());
  EXPECT_EQ(report::integer((Int{1} << 53) + 1).get<std::string>(), "9007199254740993");
  EXPECT_EQ(report::integer(-((Int{1} << 53) + 1)).get<std::string>(), "-9007199254740993");
  EXPECT_EQ(report::vec({1, INT64_MAX}).dump(), "[1,\"9223372036854775807\"]");
}

TEST(Json, IndicesAreOneBased) { EXPECT_EQ(report::indices({0, 2}).dump(), "[1,3]"); }

TEST(Json, AnalyzeNumerical) {
  Analysis A(Semigroup::numerical({24, 26, 36, 39}));
  auto r = report::analyze(A);
  const auto& j = r.json;
  for (const char* key : {"semigroup", "betti", "betti_profile", "isolated", "constants", "classification", "bounds"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["betti"].dump(), "[72,78,156]");
  EXPECT_EQ(j["semigroup"]["frobenius"], 181);
  EXPECT_EQ(j["semigroup"]["arrangement"][0]["index"], 1);
  EXPECT_EQ(j["betti_profile"]["presentation_size"], 3);
  EXPECT_EQ(j["betti_profile"]["fibers"][2]["isolated"].size(), 0u);
  EXPECT_EQ(j["classification"]["complete_intersection"], true);
  EXPECT_NE(r.text.find("156: no isolated factorizations"), std::string::npos);
  EXPECT_NE(r.text.find("arrangement: n1=24, n2=26, n3=36, n4=39"), std::string::npos);
  EXPECT_NE(r.text.find("⟨24,26,36,39⟩"), std::string::npos);
}

TEST(Json, AnalyzeAffine) {
  Analysis A(Semigroup(std::vector<Element>{{1, 0}, {0, 2}, {0, 3}}));
  auto r = report::analyze(A);
  EXPECT_EQ(r.json["betti"].dump(), "[[0,6]]");
  EXPECT_EQ(r.json["isolated"]["C"].dump(), "[2,3]");
  EXPECT_EQ(r.json["isolated"]["I_b"].dump(), "[[0,0,2],[0,3,0]]");
  EXPECT_NE(r.text.find("𝒞 = {2,3}"), std::string::npos);
}

TEST(Json, AnalyzeNonSimplicialWithBound) {
  BettiOptions opt;
  opt.degree_bound = 8;
  Analysis A(Semigroup(std::vector<Element>{{1, 0, 1}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}), opt);
  auto r = report::analyze(A);
  EXPECT_EQ(r.json["betti"].dump(), "[[1,1,1]]");
  EXPECT_EQ(r.json["betti_profile"]["complete"], false);
  EXPECT_EQ(r.json["isolated"]["C"].dump(), "[]");
  EXPECT_FALSE(r.json.contains("constants"));
}

TEST(Json, HarnessIsDeterministicAndUntimed) {
  auto corpus = enumerate_numerical_by_genus(6);
  auto a = report::harness(run_theorem_harness(corpus, {1, {}}), corpus).dump(2);
  auto b = report::harness(run_theorem_harness(corpus, {3, {}}), corpus).dump(2);
  EXPECT_EQ(a, b);
  for (const char* word : {"time", "elapsed", "seconds", "duration"}) EXPECT_EQ(a.find(word), std::string::npos) << word;
  auto j = Json::parse(a);
  EXPECT_EQ(j["violation_count"], 0);
  EXPECT_EQ(j["semigroups"], corpus.size());
}

TEST(Text, HarnessEndsWithViolationCount) {
  auto corpus = enumerate_numerical_by_genus(3);
  auto text = report::harness_text(run_theorem_harness(corpus), corpus);
  EXPECT_NE(text.find("\n0 violations\n"), std::string::npos);
}
